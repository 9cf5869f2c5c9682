"""Exact arithmetic in Z[t, t^-1] and its fraction field Q(t).

A ``LaurentPoly`` is stored as ``t**val * body`` where ``body`` is an
ordinary integer polynomial with nonzero constant term (or zero).  A
``RationalFunction`` keeps a Laurent numerator over an ordinary polynomial
denominator with a positive leading coefficient and a nonzero constant term.
The denominator is a primitive polynomial times the smallest positive integer
needed to keep the numerator integral, so equal functions have equal
representations.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from flint import fmpz_poly

__all__ = [
    "DivisionByZero",
    "LaurentPoly",
    "RationalFunction",
    "lp_arith",
    "rf_arith",
    "as_rf",
    "T",
    "ONE",
    "ZERO",
]


class DivisionByZero(ZeroDivisionError):
    """Raised when dividing by the zero rational function."""


_ZERO_POLY = fmpz_poly([])


def _strip_low(poly: fmpz_poly) -> tuple[int, fmpz_poly]:
    """Split ``poly`` as t**shift * rest with rest(0) != 0."""
    coeffs = poly.coeffs()
    shift = 0
    while shift < len(coeffs) and coeffs[shift] == 0:
        shift += 1
    if shift == 0:
        return 0, poly
    return shift, fmpz_poly(coeffs[shift:])


class LaurentPoly:
    """Laurent polynomial in t with integer coefficients (immutable)."""

    __slots__ = ("val", "body", "_hash")

    def __init__(self, terms: dict[int, int] | None = None):
        terms = {e: int(c) for e, c in (terms or {}).items() if c}
        if not terms:
            self.val, self.body = 0, _ZERO_POLY
        else:
            low = min(terms)
            coeffs = [0] * (max(terms) - low + 1)
            for e, c in terms.items():
                coeffs[e - low] = c
            self.val, self.body = low, fmpz_poly(coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, val: int, body: fmpz_poly) -> "LaurentPoly":
        if body == 0:
            val, body = 0, _ZERO_POLY
        else:
            shift, body = _strip_low(body)
            val += shift
        obj = cls.__new__(cls)
        obj.val, obj.body, obj._hash = val, body, None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return {self.val + i: int(c) for i, c in enumerate(self.body.coeffs()) if c}

    def is_zero(self) -> bool:
        return self.body == 0

    def is_monomial(self) -> bool:
        return self.body.degree() == 0

    def degree(self) -> int:
        return self.val + self.body.degree()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.val == other.val and self.body == other.body

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.val, tuple(int(c) for c in self.body.coeffs())))
        return self._hash

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.val, -self.body)

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        low = min(self.val, other.val)
        a = self.body if self.val == low else self.body * fmpz_poly([0] * (self.val - low) + [1])
        b = other.body if other.val == low else other.body * fmpz_poly([0] * (other.val - low) + [1])
        return LaurentPoly._raw(low, a + b)

    __radd__ = __add__

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.const(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly._raw(self.val, self.body * other)
        if self.is_zero() or other.is_zero():
            return ZERO_LP
        # product of polynomials with nonzero constant terms keeps that property
        obj = LaurentPoly.__new__(LaurentPoly)
        obj.val, obj.body, obj._hash = self.val + other.val, self.body * other.body, None
        return obj

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n >= 0:
            obj = LaurentPoly.__new__(LaurentPoly)
            obj.val, obj.body, obj._hash = self.val * n, self.body**n, None
            return obj
        if not self.is_monomial() or abs(int(self.body[0])) != 1:
            raise ValueError("only unit monomials have negative powers in Z[t, t^-1]")
        return LaurentPoly.monomial(-self.val * (-n), int(self.body[0]) ** (-n))

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by t**n."""
        if self.is_zero():
            return self
        obj = LaurentPoly.__new__(LaurentPoly)
        obj.val, obj.body, obj._hash = self.val + n, self.body, None
        return obj

    def gcd(self, other: "LaurentPoly") -> "LaurentPoly":
        """Greatest common divisor up to units t^n, with positive leading coefficient."""
        if self.is_zero():
            return other if other.is_zero() or other.body.coeffs()[-1] > 0 else -other
        return LaurentPoly._raw(0, self.body.gcd(other.body))

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient in Z[t, t^-1]; raises ValueError if ``other`` does not divide."""
        if other.is_zero():
            raise DivisionByZero("division by the zero Laurent polynomial")
        q, r = divmod(self.body, other.body)
        if r != 0:
            raise ValueError(f"{other} does not divide {self}")
        return LaurentPoly._raw(self.val - other.val, q)

    def subs_inverse(self) -> "LaurentPoly":
        """The bar involution t -> t^-1."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def evaluate(self, value: Fraction | int) -> Fraction:
        value = Fraction(value)
        return sum((Fraction(c) * value**e for e, c in self.terms.items()), Fraction(0))

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        terms = sorted(self.terms.items())
        if not terms:
            return "0"
        parts = []
        for idx, (e, c) in enumerate(terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "t" if e == 1 else f"t^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if idx == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``; also accepts bare integers and ``t``."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return ZERO_LP
        terms: dict[int, int] = {}
        pos = 0
        term = re.compile(r"([+-]?)(?:(\d+)\*?)?(t(?:\^(-?\d+))?)?")
        while pos < len(text):
            m = term.match(text, pos)
            if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse Laurent polynomial {text!r} at {pos}")
            sign, digits, tpart, exp = m.groups()
            c = int(digits) if digits else 1
            e = (int(exp) if exp is not None else 1) if tpart else 0
            terms[e] = terms.get(e, 0) + (-c if sign == "-" else c)
            pos = m.end()
        return cls(terms)


ZERO_LP = LaurentPoly()
ONE_LP = LaurentPoly.const(1)


def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown Laurent operation {op!r}")


def _content(poly: fmpz_poly) -> int:
    g = 0
    for c in poly.coeffs():
        g = gcd(g, int(c))
    return g


class RationalFunction:
    """Element of Q(t) stored as num / den, reduced and canonical (immutable).

    ``den`` is an ordinary integer polynomial with den(0) != 0, content 1 and
    positive leading coefficient.  All of the rational scalar lives in ``num``
    except for an integer denominator, which is absorbed into ``den`` as a
    constant factor; in that case content 1 is relaxed to gcd(content(num),
    den) = 1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly | int = 0, den: LaurentPoly | int = 1):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if isinstance(den, int):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        self.num, self.den = _reduce(num.shift(-den.val), den.body)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: fmpz_poly) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def from_lp(cls, num: LaurentPoly) -> "RationalFunction":
        return cls._raw(num, _ONE_POLY)

    @classmethod
    def t_power(cls, n: int, coeff: int = 1) -> "RationalFunction":
        return cls._raw(LaurentPoly.monomial(n, coeff), _ONE_POLY)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    @property
    def denominator(self) -> LaurentPoly:
        return LaurentPoly._raw(0, self.den)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RationalFunction(other)
        elif isinstance(other, LaurentPoly):
            other = RationalFunction.from_lp(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, tuple(int(c) for c in self.den.coeffs())))
        return self._hash

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other: "RationalFunction | LaurentPoly | int") -> "RationalFunction":
        other = as_rf(other)
        if self.den == 1 and other.den == 1:
            return RationalFunction._raw(self.num + other.num, _ONE_POLY)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            num = self.num + other.num
            return RationalFunction._from_parts(num, self.den)
        num = self.num * LaurentPoly._raw(0, other.den) + other.num * LaurentPoly._raw(0, self.den)
        return RationalFunction._from_parts(num, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: "RationalFunction | LaurentPoly | int") -> "RationalFunction":
        return self + (-as_rf(other))

    def __rsub__(self, other: "LaurentPoly | int") -> "RationalFunction":
        return as_rf(other) - self

    def __mul__(self, other: "RationalFunction | LaurentPoly | int") -> "RationalFunction":
        other = as_rf(other)
        if self.den == 1 and other.den == 1:
            return RationalFunction._raw(self.num * other.num, _ONE_POLY)
        if self.is_zero() or other.is_zero():
            return ZERO
        return RationalFunction._from_parts(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(LaurentPoly._raw(0, self.den), self.num)

    def __truediv__(self, other: "RationalFunction | LaurentPoly | int") -> "RationalFunction":
        return self * as_rf(other).inverse()

    def __rtruediv__(self, other: "LaurentPoly | int") -> "RationalFunction":
        return as_rf(other) * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        if self.den == 1:
            return RationalFunction._raw(self.num**n, _ONE_POLY)
        return RationalFunction._raw(self.num**n, self.den**n)

    @classmethod
    def _from_parts(cls, num: LaurentPoly, den: fmpz_poly) -> "RationalFunction":
        n, d = _reduce(num, den)
        return cls._raw(n, d)

    def canonicalize(self) -> "RationalFunction":
        n, d = _reduce(self.num, self.den)
        return RationalFunction._raw(n, d)

    def subs_inverse(self) -> "RationalFunction":
        den = LaurentPoly._raw(0, self.den).subs_inverse()
        return RationalFunction(self.num.subs_inverse(), den)

    def evaluate(self, value: Fraction | int) -> Fraction:
        d = LaurentPoly._raw(0, self.den).evaluate(value)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at t = {value}")
        return self.num.evaluate(value) / d

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        den = LaurentPoly._raw(0, self.den)
        return f"({self.num}) / ({den})"

    @classmethod
    def parse(cls, text: str) -> "RationalFunction":
        if "/" in text:
            num, den = (part.strip().removeprefix("(").removesuffix(")") for part in text.split("/", 1))
            return cls(LaurentPoly.parse(num), LaurentPoly.parse(den))
        return cls.from_lp(LaurentPoly.parse(text))


_ONE_POLY = fmpz_poly([1])


def _reduce(num: LaurentPoly, den: fmpz_poly) -> tuple[LaurentPoly, fmpz_poly]:
    """Bring num / den (den an ordinary polynomial) to canonical form."""
    if num.is_zero():
        return ZERO_LP, _ONE_POLY
    shift, den = _strip_low(den)
    val = num.val - shift
    body = num.body
    if den.degree() > 0:
        g = body.gcd(den)
        if g.degree() > 0:
            body = body // g
            den = den // g
    # normalize the scalar part: content(den) and sign go into the numerator
    cd = _content(den)
    lead = int(den[den.degree()])
    unit = cd if lead > 0 else -cd
    if unit != 1:
        den = den // unit
        if body.degree() >= 0 and all(int(c) % unit == 0 for c in body.coeffs()):
            body = body // unit
        else:
            cb = _content(body)
            g = gcd(cb, unit)
            body = body // (g if unit > 0 else -g)
            den = den * (abs(unit) // g)
    if den == 1:
        den = _ONE_POLY
    return LaurentPoly._raw(val, body), den


def as_rf(x: "RationalFunction | LaurentPoly | int | Fraction") -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFunction._raw(x, _ONE_POLY)
    if isinstance(x, Fraction):
        return RationalFunction(LaurentPoly.const(x.numerator), LaurentPoly.const(x.denominator))
    return RationalFunction._raw(LaurentPoly.const(int(x)), _ONE_POLY)


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown rational operation {op!r}")


ZERO = RationalFunction._raw(ZERO_LP, _ONE_POLY)
ONE = RationalFunction._raw(ONE_LP, _ONE_POLY)
T = LaurentPoly.monomial(1)
