"""Skein-module computations for plat closures of braids: relations, A_q polynomials, colored Jones."""
