"""The quantum torus Q(t)<lambda^+-1, mu^+-1> with lambda mu = t^2 mu lambda.

Elements are stored in the normal order mu^b lambda^a.  Moving lambda^a past
mu^b costs the scalar t^(2ab).
"""

from __future__ import annotations

import json
import re
from typing import Mapping

from .coefficients import ONE, ZERO, LaurentPoly, RationalFunction, as_rf

Exponent = tuple[int, int]  # (b, a) for mu^b lambda^a


class QTorusElement:
    """Immutable element sum c_(b,a) mu^b lambda^a."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, RationalFunction | LaurentPoly | int] | None = None):
        clean: dict[Exponent, RationalFunction] = {}
        for key, c in (terms or {}).items():
            c = as_rf(c)
            if not c.is_zero():
                clean[(int(key[0]), int(key[1]))] = c
        self.terms = clean
        self._hash: int | None = None

    @classmethod
    def monomial(cls, b: int = 0, a: int = 0, c: RationalFunction | LaurentPoly | int = 1) -> "QTorusElement":
        return cls({(b, a): c})

    @classmethod
    def scalar(cls, c: RationalFunction | LaurentPoly | int) -> "QTorusElement":
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QTorusElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self) -> "QTorusElement":
        return QTorusElement({k: -c for k, c in self.terms.items()})

    def __add__(self, other: "QTorusElement") -> "QTorusElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return QTorusElement(out)

    def __sub__(self, other: "QTorusElement") -> "QTorusElement":
        return self + (-other)

    def scale(self, c: RationalFunction | LaurentPoly | int) -> "QTorusElement":
        c = as_rf(c)
        return QTorusElement({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "QTorusElement | RationalFunction | LaurentPoly | int") -> "QTorusElement":
        if not isinstance(other, QTorusElement):
            return self.scale(other)
        return qt_mult(self, other)

    def __rmul__(self, other: RationalFunction | LaurentPoly | int) -> "QTorusElement":
        return self.scale(other)

    def __pow__(self, n: int) -> "QTorusElement":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have inverses")
            ((b, a), c), = self.terms.items()
            inv = QTorusElement.monomial(-b, -a, ONE / c)
            # (mu^b l^a)^-1 = l^-a mu^-b = t^(2ab) mu^-b l^-a
            inv = inv.scale(RationalFunction.t_power(2 * a * b))
            return inv ** (-n)
        out = QTorusElement.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def lambda_support(self) -> list[int]:
        return sorted({a for _, a in self.terms})

    def lambda_coefficient(self, a: int) -> dict[int, RationalFunction]:
        """The mu-exponent -> coefficient map of the lambda^a part."""
        return {b: c for (b, aa), c in self.terms.items() if aa == a}

    def sorted_terms(self) -> list[tuple[Exponent, RationalFunction]]:
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (b, a), c in self.sorted_terms():
            text = str(c)
            parts.append(f"({text}) * m^{b} l^{a}" if " " in text else f"{text} * m^{b} l^{a}")
        return " + ".join(parts)

    def to_json(self) -> str:
        return json.dumps(
            {"terms": [{"m": b, "l": a, "coeff": str(c)} for (b, a), c in self.sorted_terms()], "text": self.to_text()}
        )

    @classmethod
    def from_json(cls, text: str) -> "QTorusElement":
        data = json.loads(text)
        return cls({(d["m"], d["l"]): RationalFunction.parse(d["coeff"]) for d in data["terms"]})

    @classmethod
    def parse(cls, text: str) -> "QTorusElement":
        """Inverse of ``to_text``."""
        text = text.strip()
        if text == "0":
            return cls()
        terms: dict[Exponent, RationalFunction] = {}
        for part in _split_top_level(text):
            m = re.fullmatch(r"\s*(.*?)\s*\*\s*m\^(-?\d+)\s+l\^(-?\d+)\s*", part)
            if not m:
                raise ValueError(f"cannot parse quantum torus term {part!r}")
            coeff = m.group(1)
            if coeff.startswith("(") and _closes_at_end(coeff):
                coeff = coeff[1:-1]
            key = (int(m.group(2)), int(m.group(3)))
            terms[key] = terms.get(key, ZERO) + RationalFunction.parse(coeff)
        return cls(terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"QTorusElement({self.to_text()!r})"


def _split_top_level(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(" + ", i):
            parts.append(text[start:i])
            start = i + 3
    parts.append(text[start:])
    return parts


def _closes_at_end(text: str) -> bool:
    """Whether the parenthesis opening ``text`` is closed by its last character."""
    depth = 0
    for i, ch in enumerate(text):
        depth += (ch == "(") - (ch == ")")
        if depth == 0:
            return i == len(text) - 1
    return False


def qt_mult(u: QTorusElement, v: QTorusElement) -> QTorusElement:
    """Product in normal order using lambda^a mu^b = t^(2ab) mu^b lambda^a."""
    out: dict[Exponent, RationalFunction] = {}
    for (b1, a1), c1 in u.terms.items():
        for (b2, a2), c2 in v.terms.items():
            key = (b1 + b2, a1 + a2)
            out[key] = out.get(key, ZERO) + c1 * c2 * RationalFunction.t_power(2 * a1 * b2)
    return QTorusElement(out)


def theta(u: QTorusElement) -> QTorusElement:
    """The involution lambda -> lambda^-1, mu -> mu^-1 (an algebra map)."""
    # mu^b l^a -> mu^-b l^-a, already normal-ordered
    return QTorusElement({(-b, -a): c for (b, a), c in u.terms.items()})


LAMBDA = QTorusElement.monomial(0, 1)
MU = QTorusElement.monomial(1, 0)
LAMBDA_INV = QTorusElement.monomial(0, -1)
MU_INV = QTorusElement.monomial(-1, 0)


def boundary_generators() -> tuple[QTorusElement, QTorusElement, QTorusElement]:
    """x_l = -l - l^-1, x_m = -m - m^-1, x_lm = t(l m^-1 + l^-1 m).

    The second summand of x_lm is l^-1 m, the theta-image of l m^-1, so all
    three generators are theta-invariant.
    """
    x_l = -(LAMBDA + LAMBDA_INV)
    x_m = -(MU + MU_INV)
    x_lm = (LAMBDA * MU_INV + LAMBDA_INV * MU).scale(RationalFunction.t_power(1))
    return x_l, x_m, x_lm


def chebyshev(n: int) -> list[int]:
    """Coefficients [c_0, ..., c_n] of T_n with T_n = x T_(n-1) - T_(n-2)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    prev, cur = [1], [0, 1]
    if n == 0:
        return prev
    for _ in range(n - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


def evaluate_polynomial(coeffs: list, x: QTorusElement) -> QTorusElement:
    """Horner evaluation of a one-variable polynomial at ``x``."""
    out = QTorusElement()
    for c in reversed(coeffs):
        out = out * x + QTorusElement.scalar(as_rf(c))
    return out


__all__ = [
    "QTorusElement",
    "qt_mult",
    "theta",
    "boundary_generators",
    "chebyshev",
    "evaluate_polynomial",
    "LAMBDA",
    "MU",
    "LAMBDA_INV",
    "MU_INV",
]
