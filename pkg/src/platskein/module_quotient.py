"""The skein-level module A_(b,1) at the generic point of its character ring.

A_(b,1) is spanned by the basis alpha_I over the trace ring, modulo
w . r - w for each plat relation word r (and its inverse) and every word w.
Its coefficients are taken modulo the trace relations.  Working over the
fraction field K of the character ring turns membership and rank questions
into linear algebra: K is Q(t, x-variables) with y adjoined through the
lowest rewrite rule y^n -> tail (n = 1 or 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import flint

from .braid_plat import BraidWord, parse_braid, plat_permutation_components, relation_words
from .character_module import RelationSet, presented_braid, reduced_words, reduction_system
from .coefficients import LaurentPoly, RationalFunction
from .skein_word import SkeinElement, straighten
from .trace_ring import Y, Generator, TracePoly, gen_key, merge_knot_variables


class UnsupportedRule(ValueError):
    """The character ring is not a field extension of degree <= 2 in y."""


def module_relations(
    b: BraidWord | str, max_word_len: int = 2, presentation: str = "plain", knot: bool | None = None
) -> list[SkeinElement]:
    """w . r - w for r in the relation words and their inverses, |w| <= max_word_len."""
    if isinstance(b, str):
        b = parse_braid(b)
    if knot is None:
        knot = plat_permutation_components(b) == 1
    out = []
    for r in relation_words(presented_braid(b, presentation)):
        for rr in (r, r.inverse()):
            for w in reduced_words(b.bridges, max_word_len):
                e = straighten(w * rr, b.bridges) - straighten(w, b.bridges)
                if knot:
                    e = SkeinElement({k: merge_knot_variables(v) for k, v in e.coords.items()})
                if not e.is_zero():
                    out.append(e)
    return out


class _Field:
    """Q(t, x...)[y]/(y^n - tail) with fractions of integer multivariate polynomials."""

    def __init__(self, generators: list[Generator], rule_degree: int, tail: TracePoly | None):
        names = ["t"] + ["x" + "".join(map(str, g)) for g in generators]
        self.ctx = flint.fmpz_mpoly_ctx.get(tuple(names), "lex")
        gens = self.ctx.gens()
        self.t = gens[0]
        self.var = dict(zip(generators, gens[1:]))
        self.zero = self.ctx.from_dict({})
        self.one = self.ctx.from_dict({(0,) * len(names): 1})
        self.degree = rule_degree
        if rule_degree == 2:
            self.s = self.from_trace(TracePoly._raw({m[:-1]: c for m, c in tail.terms.items() if Y in m}))
            self.r = self.from_trace(TracePoly._raw({m: c for m, c in tail.terms.items() if Y not in m}))

    # fractions num/den over fmpz_mpoly
    def frac(self, num, den=None):
        den = self.one if den is None else den
        if num == 0:
            return (self.zero, self.one)
        g = num.gcd(den)
        num, den = num / g, den / g
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return (num, den)

    def fadd(self, a, b):
        return self.frac(a[0] * b[1] + b[0] * a[1], a[1] * b[1])

    def fmul(self, a, b):
        return self.frac(a[0] * b[0], a[1] * b[1])

    def fneg(self, a):
        return (-a[0], a[1])

    def finv(self, a):
        if a[0] == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.frac(a[1], a[0])

    def laurent(self, p: LaurentPoly):
        num = self.zero
        low = min(p.terms, default=0)
        for e, c in p.terms.items():
            num = num + c * self.t ** (e - low)
        return self.frac(num * self.t**low, self.one) if low >= 0 else self.frac(num, self.t ** (-low))

    def rational(self, c: RationalFunction):
        return self.fmul(self.laurent(c.num), self.finv(self.laurent(c.denominator)))

    def from_trace(self, p: TracePoly):
        """A y-free trace polynomial as a fraction."""
        total = (self.zero, self.one)
        for m, c in p.terms.items():
            mono = self.one
            for g in m:
                if g == Y:
                    raise UnsupportedRule("unexpected y in a coefficient")
                mono = mono * self.var[g]
            total = self.fadd(total, self.fmul(self.rational(c), (mono, self.one)))
        return total

    # elements a + b y
    def element(self, p: TracePoly):
        by_y: dict[int, dict] = {}
        for m, c in p.terms.items():
            k = m.count(Y)
            if k >= self.degree:
                raise UnsupportedRule(f"y^{k} survives normal form")
            by_y.setdefault(k, {})[tuple(g for g in m if g != Y)] = c
        a = self.from_trace(TracePoly._raw(by_y.get(0, {})))
        b = self.from_trace(TracePoly._raw(by_y.get(1, {})))
        return (a, b)

    def is_zero(self, u) -> bool:
        return u[0][0] == 0 and u[1][0] == 0

    def add(self, u, v):
        return (self.fadd(u[0], v[0]), self.fadd(u[1], v[1]))

    def neg(self, u):
        return (self.fneg(u[0]), self.fneg(u[1]))

    def mul(self, u, v):
        (a, b), (c, d) = u, v
        ac, bd = self.fmul(a, c), self.fmul(b, d)
        cross = self.fadd(self.fmul(a, d), self.fmul(b, c))
        if self.degree == 1:
            return (ac, cross)
        return (self.fadd(ac, self.fmul(bd, self.r)), self.fadd(cross, self.fmul(bd, self.s)))

    def inv(self, u):
        a, b = u
        if b[0] == 0:
            return (self.finv(a), (self.zero, self.one))
        # (a + b y)(a + b s - b y) = a^2 + a b s - b^2 r
        conj = (self.fadd(a, self.fmul(b, self.s)), self.fneg(b))
        norm = self.fadd(self.fmul(a, a), self.fmul(self.fmul(a, b), self.s))
        norm = self.fadd(norm, self.fneg(self.fmul(self.fmul(b, b), self.r)))
        ninv = self.finv(norm)
        return (self.fmul(conj[0], ninv), self.fmul(conj[1], ninv))


@dataclass
class ModuleQuotient:
    """Row-reduced module relations over the fraction field of the character ring."""

    field: _Field
    basis: list[tuple[int, ...]]
    pivots: list[tuple[int, list]]
    rs: RelationSet

    @classmethod
    def build(cls, rs: RelationSet, relations: Iterable[SkeinElement]) -> "ModuleQuotient":
        relations = list(relations)
        system = reduction_system(rs)
        if not system.rules:
            raise UnsupportedRule("no rewrite rule for y")
        n = min(system.rules)
        if n > 2:
            raise UnsupportedRule(f"lowest rule has y-degree {n}")
        gens = sorted(
            {g for e in relations for c in e.coords.values() for m in c.terms for g in m if g != Y}
            | {g for m in system.rules[n].terms for g in m if g != Y},
            key=gen_key,
        )
        field = _Field(gens, n, system.rules[n] if n == 2 else None)
        k = rs.bridges
        basis = [()] + [tuple(i for i in range(1, k + 1) if mask >> (i - 1) & 1) for mask in range(1, 2**k)]
        basis.sort(key=lambda b: (len(b), b))
        quotient = cls(field, basis, [], rs)
        for e in relations:
            quotient._insert(quotient.vector(e))
        return quotient

    def vector(self, e: SkeinElement) -> list:
        system = reduction_system(self.rs)
        return [self.field.element(system.normal_form(e.coefficient(b))) for b in self.basis]

    def _reduce(self, v: list) -> list:
        f = self.field
        for col, row in self.pivots:
            c = v[col]
            if not f.is_zero(c):
                v = [f.add(a, f.neg(f.mul(c, b))) for a, b in zip(v, row)]
        return v

    def _insert(self, v: list) -> None:
        f = self.field
        v = self._reduce(v)
        col = next((i for i, a in enumerate(v) if not f.is_zero(a)), None)
        if col is None:
            return
        inv = f.inv(v[col])
        v = [f.mul(inv, a) for a in v]
        self.pivots = [(c, [f.add(a, f.neg(f.mul(row[col], b))) for a, b in zip(row, v)]) for c, row in self.pivots]
        self.pivots.append((col, v))

    @property
    def rank(self) -> int:
        """Dimension of the span of the relations; the quotient has dimension len(basis) - rank."""
        return len(self.pivots)

    def contains(self, e: SkeinElement) -> bool:
        """Whether ``e`` vanishes in the module at the generic point."""
        return all(self.field.is_zero(a) for a in self._reduce(self.vector(e)))


__all__ = ["UnsupportedRule", "module_relations", "ModuleQuotient"]
