"""Commutative polynomials over Q(t) in the trace generators x_I.

A generator is a strictly increasing tuple of puncture labels; the tuple
``(0,)`` is reserved for the knot-merged variable ``x``.  A monomial is a
sorted tuple of generators (with repetition) and a ``TracePoly`` maps
monomials to ``RationalFunction`` coefficients.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .coefficients import ONE, ZERO, LaurentPoly, RationalFunction, as_rf

Generator = tuple[int, ...]
Monomial = tuple[Generator, ...]

MERGED: Generator = (0,)
Y: Generator = (1, 2)


class MixedArity(ValueError):
    """A generator references a puncture outside 1..k."""


def gen_key(g: Generator) -> tuple[int, Generator]:
    return (len(g), g)


def mono_key(m: Monomial) -> tuple:
    return tuple(sorted((gen_key(g) for g in m), reverse=True))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, key=gen_key))


def gen_name(g: Generator, y_name: bool = False) -> str:
    if g == MERGED:
        return "x"
    if y_name and g == Y:
        return "y"
    return "x" + "".join(str(i) for i in g)


class TracePoly:
    """Immutable element of Q(t)[x_I]."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, RationalFunction] | None = None):
        self.terms: dict[Monomial, RationalFunction] = {
            m: c for m, c in (terms or {}).items() if not c.is_zero()
        }
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, RationalFunction]) -> "TracePoly":
        obj = cls.__new__(cls)
        obj.terms, obj._hash = terms, None
        return obj

    @classmethod
    def const(cls, c: RationalFunction | LaurentPoly | int) -> "TracePoly":
        c = as_rf(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def gen(cls, g: Iterable[int] | int) -> "TracePoly":
        """The single generator x_g (lengths >= 4 are rewritten on the spot)."""
        g = (g,) if isinstance(g, int) else tuple(g)
        if any(b <= a for a, b in zip(g, g[1:])) or not g:
            raise ValueError(f"generator index must be strictly increasing and nonempty: {g}")
        if len(g) >= 4:
            return _long_generator(g)
        return cls._raw({(g,): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def generators(self) -> set[Generator]:
        return {g for m in self.terms for g in m}

    def max_puncture(self) -> int:
        return max((max(g) for g in self.generators()), default=0)

    def check_arity(self, k: int) -> None:
        if self.max_puncture() > k:
            raise MixedArity(f"generator beyond puncture {k} in {self}")

    def constant_value(self) -> RationalFunction:
        """The coefficient of the empty monomial."""
        return self.terms.get((), ZERO)

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentPoly, RationalFunction)):
            other = TracePoly.const(other)
        if not isinstance(other, TracePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self) -> "TracePoly":
        return TracePoly._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other: "TracePoly | RationalFunction | LaurentPoly | int") -> "TracePoly":
        if not isinstance(other, TracePoly):
            other = TracePoly.const(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[m]
                else:
                    out[m] = s
        return TracePoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other: "TracePoly | RationalFunction | LaurentPoly | int") -> "TracePoly":
        if not isinstance(other, TracePoly):
            other = TracePoly.const(other)
        return self + (-other)

    def __rsub__(self, other: "RationalFunction | LaurentPoly | int") -> "TracePoly":
        return TracePoly.const(other) - self

    def scale(self, c: RationalFunction | LaurentPoly | int) -> "TracePoly":
        c = as_rf(c)
        if c.is_zero():
            return ZERO_TP
        if c == ONE:
            return self
        return TracePoly._raw({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other: "TracePoly | RationalFunction | LaurentPoly | int") -> "TracePoly":
        if not isinstance(other, TracePoly):
            return self.scale(other)
        out: dict[Monomial, RationalFunction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                s = out.get(m)
                out[m] = c if s is None else s + c
        return TracePoly._raw({m: c for m, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TracePoly":
        out = ONE_TP
        for _ in range(n):
            out = out * self
        return out

    def substitute(self, images: Mapping[Generator, "TracePoly"]) -> "TracePoly":
        """Ring homomorphism sending listed generators to the given images."""
        out = ZERO_TP
        for m, c in self.terms.items():
            term = TracePoly._raw({(): c})
            rest: list[Generator] = []
            for g in m:
                if g in images:
                    term = term * images[g]
                else:
                    rest.append(g)
            if rest:
                term = term * TracePoly._raw({tuple(rest): ONE})
            out = out + term
        return out

    def map_coefficients(self, fn: Callable[[RationalFunction], RationalFunction]) -> "TracePoly":
        return TracePoly({m: fn(c) for m, c in self.terms.items()})

    def degree_in(self, g: Generator) -> int:
        return max((m.count(g) for m in self.terms), default=-1)

    def coefficients_in(self, g: Generator) -> dict[int, "TracePoly"]:
        """Expand as a polynomial in x_g with TracePoly coefficients."""
        out: dict[int, dict[Monomial, RationalFunction]] = {}
        for m, c in self.terms.items():
            n = m.count(g)
            rest = tuple(h for h in m if h != g)
            out.setdefault(n, {})[rest] = c
        return {n: TracePoly._raw(d) for n, d in out.items()}

    def evaluate(self, values: Mapping[Generator, Fraction], t: Fraction) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c.evaluate(t)
            for g in m:
                v *= values[g]
            total += v
        return total

    def sorted_terms(self) -> list[tuple[Monomial, RationalFunction]]:
        return sorted(self.terms.items(), key=lambda mc: mono_key(mc[0]), reverse=True)

    def to_text(self, y_name: bool = False) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            negative, coef = _coef_text(c)
            factors = [coef] if coef else []
            factors += _mono_factors(m, y_name)
            body = "*".join(factors) if factors else "1"
            if idx == 0:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append(("- " if negative else "+ ") + body)
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"TracePoly({self})"

    @classmethod
    def parse(cls, text: str) -> "TracePoly":
        return _parse_trace(text)


ZERO_TP = TracePoly._raw({})
ONE_TP = TracePoly._raw({(): ONE})


def _coef_text(c: RationalFunction) -> tuple[bool, str]:
    """Split a coefficient into (negative?, printed factor or '')."""
    if c.is_laurent() and c.num.is_monomial():
        (e, v), = c.num.terms.items()
        mag = abs(v)
        if e == 0:
            return v < 0, "" if mag == 1 else str(mag)
        return v < 0, f"t^{e}" if mag == 1 else f"{mag}*t^{e}"
    return False, f"({c})"


def _mono_factors(m: Monomial, y_name: bool) -> list[str]:
    counts: dict[Generator, int] = {}
    for g in m:
        counts[g] = counts.get(g, 0) + 1
    out = []
    for g in sorted(counts, key=gen_key, reverse=True):
        n = counts[g]
        name = gen_name(g, y_name)
        out.append(name if n == 1 else f"{name}^{n}")
    return out


def tp_arith(a: TracePoly, b: TracePoly, op: str) -> TracePoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown trace-ring operation {op!r}")


# ---------------------------------------------------------------------------
# four-index rewriting

_CACHE: dict[Generator, TracePoly] = {}


def _x(idx: Iterable[int]) -> TracePoly:
    return TracePoly.gen(tuple(sorted(idx)))


def _t(n: int) -> RationalFunction:
    return RationalFunction.t_power(n)


def four_index_rhs(i: int, j: int, l: int, xi: Generator) -> TracePoly:
    """Everything in the skein identity for x_il * x_jxi except the top term.

    The identity reads  x_il x_jxi = (t^2 + t^-2) x_ijlxi + rhs, where xi may
    be a block of consecutive labels treated as a single puncture.
    """
    x_i, x_j, x_l, x_xi = _x([i]), _x([j]), _x([l]), _x(xi)
    return (
        _x((j, l) + xi) * x_i
        + _x((i, l) + xi) * x_j
        + _x((i, j) + xi) * x_l
        + _x((i, j, l)) * x_xi
        + (_x((i,) + xi) * _x((j, l))).scale(_t(-4))
        + (_x((i, j)) * _x((l,) + xi)).scale(_t(4))
        + (x_i * x_j * _x((l,) + xi)).scale(_t(2))
        + (x_l * x_xi * _x((i, j))).scale(_t(2))
        + (x_i * x_xi * _x((j, l))).scale(_t(-2))
        + (x_j * x_l * _x((i,) + xi)).scale(_t(-2))
        + x_i * x_j * x_l * x_xi
    )


_LOOP = RationalFunction.from_lp(LaurentPoly({2: 1, -2: 1}))


def _long_generator(g: Generator) -> TracePoly:
    """Rewrite x_g (len >= 4) by solving the four-index identity."""
    hit = _CACHE.get(g)
    if hit is not None:
        return hit
    i, j, l, xi = g[0], g[1], g[2], g[3:]
    lhs = _x((i, l)) * _x((j,) + xi)
    value = (lhs - four_index_rhs(i, j, l, xi)).scale(_LOOP.inverse())
    _CACHE[g] = value
    return value


def reduce_four_index(p: TracePoly) -> TracePoly:
    """Rewrite every generator with four or more labels into shorter ones."""
    long = {g for g in p.generators() if len(g) >= 4}
    if not long:
        return p
    return p.substitute({g: _long_generator(g) for g in long})


def reduce_four_index_in_order(p: TracePoly, rng: random.Random) -> TracePoly:
    """Same rewrite, one generator occurrence at a time in random order."""
    while True:
        long = sorted(g for g in p.generators() if len(g) >= 4)
        if not long:
            return p
        g = rng.choice(long)
        p = p.substitute({g: _long_generator(g)})


def merge_knot_variables(p: TracePoly) -> TracePoly:
    """Identify every single-puncture generator x_i with one variable x."""
    singles = {g for g in p.generators() if len(g) == 1 and g != MERGED}
    if not singles:
        return p
    xx = TracePoly._raw({(MERGED,): ONE})
    return p.substitute({g: xx for g in singles})


def merged_x() -> TracePoly:
    return TracePoly._raw({(MERGED,): ONE})


def y_gen() -> TracePoly:
    return TracePoly.gen(Y)


# ---------------------------------------------------------------------------
# parsing of the text form produced by ``to_text``

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([+\-*/^])|(\d+)|(t)|(x\d*|y))")


def _tokens(text: str) -> list[tuple[str, str]]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot tokenize {text!r} at position {pos}")
        kinds = ("(", ")", "op", "int", "t", "gen")
        for kind, val in zip(kinds, m.groups()):
            if val is not None:
                out.append((kind, val))
                break
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.pos = 0

    def peek(self) -> tuple[str, str] | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self) -> tuple[str, str]:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> TracePoly:
        sign = 1
        if self.peek() and self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        total = self.term().scale(sign)
        while self.peek() and self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            total = total + rhs if op == "+" else total - rhs
        return total

    def term(self) -> TracePoly:
        val = self.power()
        while self.peek() and self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            rhs = self.power()
            if op == "*":
                val = val * rhs
            else:
                if not rhs.is_constant():
                    raise ValueError("division only by elements of Q(t)")
                val = val.scale(rhs.constant_value().inverse())
        return val

    def power(self) -> TracePoly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "int":
                raise ValueError("exponent must be an integer")
            n = sign * int(val)
            if n < 0:
                if not base.is_constant():
                    raise ValueError("negative powers only of Q(t) elements")
                return TracePoly.const(base.constant_value() ** n)
            return base**n
        return base

    def atom(self) -> TracePoly:
        kind, val = self.take()
        if kind == "(":
            inner = self.expr()
            if self.take()[0] != ")":
                raise ValueError("unbalanced parenthesis")
            return inner
        if kind == "int":
            return TracePoly.const(int(val))
        if kind == "t":
            return TracePoly.const(LaurentPoly.monomial(1))
        if kind == "gen":
            if val == "x":
                return merged_x()
            if val == "y":
                return y_gen()
            return TracePoly.gen(tuple(int(ch) for ch in val[1:]))
        if kind == "op" and val == "-":
            return -self.atom()
        raise ValueError(f"unexpected token {val!r}")


def _parse_trace(text: str) -> TracePoly:
    parser = _Parser(text)
    out = parser.expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input in {text!r}")
    return out


__all__ = [
    "Generator",
    "Monomial",
    "MixedArity",
    "TracePoly",
    "ZERO_TP",
    "ONE_TP",
    "MERGED",
    "Y",
    "tp_arith",
    "reduce_four_index",
    "reduce_four_index_in_order",
    "four_index_rhs",
    "merge_knot_variables",
    "merged_x",
    "y_gen",
    "gen_name",
]
