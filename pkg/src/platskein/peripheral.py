"""Action of the boundary torus on the character module of a two-bridge knot.

``L`` is the longitude x_l applied to 1 and ``Lp`` is (-t^3) x_lm applied to 1;
``L_n`` and ``Lp_n`` are their actions on x^n, obtained by the longitude
recursion.  Eliminating y between L . p(x) and Lp . q(x) gives a relation
L . p + Lp . q + r = 0 with p, q, r in Q(t)[x].  Substituting
L -> x_l, Lp -> (-t^3) x_lm and x -> x_m turns it into an element of the
quantum torus that annihilates 1: the A_q polynomial.

The counit sends mu^b lambda^a (mu to the left) to t^(2b) f(a), where
f(a) = (-1)^a J^(a) and f(-a-2) = -f(a).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .braid_plat import BraidWord, parse_braid, plat_reduce
from .character_module import DEFAULT_MAX_WORD_LEN, RelationSet, generate_relations, normal_form, y_degree
from .coefficients import ONE, ZERO, LaurentPoly, RationalFunction, as_rf
from .quantum_torus import QTorusElement, boundary_generators, evaluate_polynomial, qt_mult
from .skein_word import AlphaWord, trace_word
from .trace_ring import MERGED, Y, TracePoly, merge_knot_variables


class UnsupportedFamily(ValueError):
    """No longitude seeds are available for this braid."""


class DegenerateElimination(ValueError):
    """No y-free combination of the longitude actions was found."""


class MissingSequenceValue(LookupError):
    """The counit needs a colored Jones value that was not supplied."""


class SingularLeadingCoefficient(ZeroDivisionError):
    """The recurrence cannot be solved for the next value."""


def _t(n: int, c: int = 1) -> RationalFunction:
    return RationalFunction.t_power(n, c)


D = _t(2) - _t(-2)  # t^2 - t^-2
X = TracePoly._raw({(MERGED,): ONE})


# ---------------------------------------------------------------------------
# seeds


@dataclass(frozen=True)
class Seeds:
    """L, Lp = L'_0, Lam = Lambda_0, Lamp = Lambda'_0, normal-formed in ``rs``."""

    L: TracePoly
    Lp: TracePoly
    Lam: TracePoly
    Lamp: TracePoly
    rs: RelationSet
    name: str


# Each seed is a sum of coefficient * tr_q(word) in the knot variables.
# A coefficient (e, c, d) means c * t^e, times (t^2 - t^-2) when d is true.
_TREFOIL_WORDS: dict[str, list[tuple[tuple[int, int, bool], str]]] = {
    "L": [
        ((4, 1, False), "a2^-1 a1^-1 a2^4 a1^-1 a2^-1"),
        ((14, -1, True), "a2^-1 a1^-1 a2^5 a1"),
    ],
    "Lp": [
        ((4, 1, False), "a2^-1 a1^-1 a2^4 a1^-1 a2^-1 a1^-1"),
        ((14, -1, True), "a2^-1 a1^-1 a2^5"),
    ],
    "Lam": [
        ((10, -1, False), "a2^-1 a1^-1 a2^4"),
        ((16, 1, True), "a2^-1 a1^-1 a2^5 a1 a2 a1"),
        ((-2, -1, False), "a2^-1 a1^-1 a2^4 a1^-1 a2^-1 a1^-1 a2^-1"),
        ((8, 1, True), "a2^-1 a1^-1 a2^4"),
    ],
    "Lamp": [
        ((10, -1, False), "a2^-1 a1^-1 a2^3"),
        ((16, 1, True), "a2^-1 a1^-1 a2^4 a1 a2 a1"),
        ((-2, -1, False), "a2^-1 a1^-1 a2^3 a1^-1 a2^-1 a1^-1 a2^-1"),
        ((8, 1, True), "a2^-1 a1^-1 a2^3"),
    ],
}


def _word_sum(terms: list[tuple[tuple[int, int, bool], str]]) -> TracePoly:
    total = TracePoly()
    for (e, c, with_d), word in terms:
        coeff = _t(e, c) * (D if with_d else ONE)
        total = total + merge_knot_variables(trace_word(AlphaWord.parse(word), 2)).scale(coeff)
    return total


def sigma2_power(b: BraidWord) -> int | None:
    """m if ``b`` reduces under plat moves to sigma_2^m on four strands."""
    r = plat_reduce(b)
    if r.strands != 4 or any(i != 2 for i, _ in r.letters):
        return None
    return sum(s for _, s in r.letters)


@lru_cache(maxsize=16)
def _relations(m: int, max_word_len: int) -> RelationSet:
    presentation = "plain" if m == 1 else "p1"
    return generate_relations(BraidWord(4, ((2, 1),) * m), max_word_len, presentation=presentation)


def knot_relations(b: BraidWord | str, max_word_len: int = DEFAULT_MAX_WORD_LEN) -> RelationSet:
    """Relation set used for the peripheral computations of ``b``."""
    if isinstance(b, str):
        b = parse_braid(b)
    m = sigma2_power(b)
    if m not in (1, 3):
        raise UnsupportedFamily(f"no longitude data for the plat closure of {b}")
    return _relations(m, max_word_len)


def longitude_seeds(b: BraidWord | str, max_word_len: int = DEFAULT_MAX_WORD_LEN) -> Seeds:
    """L, L'_0, Lambda_0, Lambda'_0 for knots plat-equivalent to sigma_2 or sigma_2^3."""
    if isinstance(b, str):
        b = parse_braid(b)
    m = sigma2_power(b)
    if m == 2:
        raise UnsupportedFamily("the plat closure of sigma_2^2 is a two-component link")
    if m not in (1, 3):
        raise UnsupportedFamily(f"no longitude words for the plat closure of {b}")
    rs = _relations(m, max_word_len)
    if m == 1:
        # the longitude bounds a disk; x_lm . 1 = -t^3 x, and y acts as a scalar
        loop = TracePoly.const(-_t(2) - _t(-2))
        lp = X.scale(_t(6))
        y = normal_form(TracePoly._raw({(Y,): ONE}), rs)
        seeds = [loop, lp, normal_form(y * loop, rs), normal_form(y * lp, rs)]
        name = "unknot"
    else:
        seeds = [normal_form(_word_sum(_TREFOIL_WORDS[k]), rs) for k in ("L", "Lp", "Lam", "Lamp")]
        name = "trefoil"
    if any(y_degree(s) > 1 for s in seeds):
        raise UnsupportedFamily("seeds do not reduce to y-degree <= 1")
    return Seeds(*seeds, rs=rs, name=name)


# ---------------------------------------------------------------------------
# recursions


@dataclass(frozen=True)
class LongitudePair:
    n: int
    L: TracePoly
    Lp: TracePoly


def recurse(L: TracePoly, Lp: TracePoly, rs: RelationSet, n: int) -> LongitudePair:
    """(L_n, L'_n) from L_n = t^2 x L_(n-1) + t^-2 d L'_(n-1), L'_n = -t^2 d L_(n-1) + t^-2 x L'_(n-1)."""
    return longitude_sequence(L, Lp, rs, n)[-1]


def longitude_sequence(L: TracePoly, Lp: TracePoly, rs: RelationSet, n: int) -> list[LongitudePair]:
    if n < 0:
        raise ValueError("n must be non-negative")
    out = [LongitudePair(0, L, Lp)]
    for i in range(1, n + 1):
        a, b = out[-1].L, out[-1].Lp
        new_l = normal_form((X * a).scale(_t(2)) + b.scale(_t(-2) * D), rs)
        new_lp = normal_form(a.scale(-_t(2) * D) + (X * b).scale(_t(-2)), rs)
        out.append(LongitudePair(i, new_l, new_lp))
    return out


def recurse_lambda(
    Lam: TracePoly, Lamp: TracePoly, rs: RelationSet, n: int, method: str = "sequential"
) -> LongitudePair:
    """(Lambda_n, Lambda'_n) from the Lambda recursion.

    The first equation involves Lambda'_n at the same index, so the step is
    a 2x2 linear system.  ``sequential`` solves the second equation first and
    substitutes; ``simultaneous`` applies Cramer's rule to the full system.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = Lam, Lamp
    for _ in range(n):
        # Lambda_n - t^-2 d Lambda'_n = t^2 x Lambda_(n-1)
        # Lambda'_n = -t^-2 d Lambda_(n-1) + t^2 x Lambda'_(n-1)
        rhs1 = (X * a).scale(_t(2))
        rhs2 = a.scale(-_t(-2) * D) + (X * b).scale(_t(2))
        if method == "sequential":
            new_b = rhs2
            new_a = rhs1 + new_b.scale(_t(-2) * D)
        elif method == "simultaneous":
            m11, m12, m21, m22 = ONE, -_t(-2) * D, ZERO, ONE
            det = m11 * m22 - m12 * m21
            new_a = (rhs1.scale(m22) - rhs2.scale(m12)).scale(ONE / det)
            new_b = (rhs2.scale(m11) - rhs1.scale(m21)).scale(ONE / det)
        else:
            raise ValueError(f"unknown method {method!r}")
        a, b = normal_form(new_a, rs), normal_form(new_b, rs)
    return LongitudePair(n, a, b)


# ---------------------------------------------------------------------------
# elimination


def _x_coefficients(p: TracePoly) -> tuple[dict[int, RationalFunction], dict[int, RationalFunction]]:
    """Split p = A(x) + B(x) y into coefficient maps of A and B."""
    free: dict[int, RationalFunction] = {}
    linear: dict[int, RationalFunction] = {}
    for m, c in p.terms.items():
        ys = m.count(Y)
        if ys > 1 or any(g not in (MERGED, Y) for g in m):
            raise ValueError("expected a polynomial in x and y of y-degree <= 1")
        (linear if ys else free)[m.count(MERGED)] = c
    return free, linear


def _x_poly(coeffs: Mapping[int, RationalFunction] | Sequence[RationalFunction]) -> TracePoly:
    items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
    return TracePoly({(MERGED,) * n: c for n, c in items})


def _nullspace(rows: list[list[RationalFunction]], ncols: int) -> list[list[RationalFunction]]:
    rows = [r[:] for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pick = next((i for i in range(rank, len(rows)) if not rows[i][col].is_zero()), None)
        if pick is None:
            continue
        rows[rank], rows[pick] = rows[pick], rows[rank]
        inv = ONE / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [ZERO] * ncols
        vec[free] = ONE
        for i, col in enumerate(pivots):
            vec[col] = -rows[i][free]
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class Elimination:
    """L . p(x) + Lp . q(x) + r(x) = 0 in the character module."""

    p: TracePoly
    q: TracePoly
    r: TracePoly

    def to_text(self) -> str:
        return f"L*({self.p.to_text()}) + Lp*({self.q.to_text()}) + ({self.r.to_text()}) = 0"

    def to_json(self) -> str:
        return json.dumps({"L": self.p.to_text(), "Lp": self.q.to_text(), "const": self.r.to_text()})

    @classmethod
    def from_json(cls, text: str) -> "Elimination":
        data = json.loads(text)
        return cls(TracePoly.parse(data["L"]), TracePoly.parse(data["Lp"]), TracePoly.parse(data["const"]))

    def normalized(self) -> "Elimination":
        """Integral coprime coefficients, lowest t-exponent 0, leading term of p (else q) positive."""
        polys = [self.p, self.q, self.r]
        coeffs = [c for poly in polys for c in poly.terms.values()]
        den = LaurentPoly.const(1)
        for c in coeffs:
            den = den * c.denominator.exact_div(den.gcd(c.denominator))
        g = LaurentPoly()
        for c in coeffs:
            g = g.gcd((c * den).num)
        scale = RationalFunction.from_lp(den) / RationalFunction.from_lp(g)
        polys = [poly.scale(scale) for poly in polys]
        low = min(e for poly in polys for c in poly.terms.values() for e in c.num.terms)
        polys = [poly.scale(_t(-low)) for poly in polys]
        lead_poly = polys[0] if not polys[0].is_zero() else polys[1]
        top = max(lead_poly.terms, key=len)
        lead = lead_poly.terms[top].num
        if lead.terms[lead.degree()] < 0:
            polys = [-poly for poly in polys]
        return Elimination(*polys)

    def annihilates(self, L: TracePoly, Lp: TracePoly, rs: RelationSet) -> bool:
        """Whether the relation holds after expanding the actions by the recursion."""
        return _relation_value(self, L, Lp, rs).is_zero()


def _relation_value(e: Elimination, L: TracePoly, Lp: TracePoly, rs: RelationSet) -> TracePoly:
    dp = max((len(m) for m in e.p.terms), default=0)
    dq = max((len(m) for m in e.q.terms), default=0)
    seq = longitude_sequence(L, Lp, rs, max(dp, dq))
    total = e.r
    for n in range(dp + 1):
        total = total + seq[n].L.scale(e.p.terms.get((MERGED,) * n, ZERO))
    for n in range(dq + 1):
        total = total + seq[n].Lp.scale(e.q.terms.get((MERGED,) * n, ZERO))
    return normal_form(total, rs)


def eliminate_y(L: TracePoly, Lp: TracePoly, rs: RelationSet, max_degree: int = 8) -> Elimination:
    """The y-free relation of least total degree deg p + deg q.

    Ties go to the smaller deg p.  If L (or else Lp) has no y-part the
    relation is the trivial one with p = 1 (or q = 1).
    """
    seq = longitude_sequence(L, Lp, rs, max_degree)
    parts = [(_x_coefficients(s.L), _x_coefficients(s.Lp)) for s in seq]
    for total in range(2 * max_degree + 1):
        for dp in range(max(0, total - max_degree), min(total, max_degree) + 1):
            dq = total - dp
            cols = [parts[n][0] for n in range(dp + 1)] + [parts[n][1] for n in range(dq + 1)]
            height = max((max(c[1], default=0) for c in cols), default=0)
            rows = [[c[1].get(i, ZERO) for c in cols] for i in range(height + 1)]
            kernel = _nullspace(rows, len(cols))
            if not kernel:
                continue
            vec = kernel[0]
            p, q = vec[: dp + 1], vec[dp + 1 :]
            r = TracePoly()
            for n, c in enumerate(p):
                r = r - _x_poly(parts[n][0][0]).scale(c)
            for n, c in enumerate(q):
                r = r - _x_poly(parts[n][1][0]).scale(c)
            return Elimination(_x_poly(p), _x_poly(q), r).normalized()
    raise DegenerateElimination(f"no y-free relation with deg p, deg q <= {max_degree}")


# ---------------------------------------------------------------------------
# A_q polynomial


def _lambda_left(u: QTorusElement) -> dict[int, dict[int, RationalFunction]]:
    """u as sum_a lambda^a c_a(mu): a -> {b: coefficient}."""
    out: dict[int, dict[int, RationalFunction]] = {}
    for (b, a), c in u.terms.items():
        # mu^b lambda^a = t^(-2ab) lambda^a mu^b
        out.setdefault(a, {})[b] = c * _t(-2 * a * b)
    return out


def _from_lambda_left(coeffs: Mapping[int, Mapping[int, RationalFunction]]) -> QTorusElement:
    return QTorusElement({(b, a): c * _t(2 * a * b) for a, row in coeffs.items() for b, c in row.items()})


def _mu_poly_text(row: Mapping[int, RationalFunction]) -> str:
    parts = []
    for b, c in sorted(row.items(), reverse=True):
        mono = "" if b == 0 else ("m" if b == 1 else f"m^{b}")
        text = str(c)
        if not mono:
            parts.append(f"({text})" if " " in text and len(row) > 1 else text)
        elif text in ("1", "-1"):
            parts.append(text[:-1] + mono)
        else:
            parts.append(f"({text})*{mono}" if " " in text else f"{text}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class AqPolynomial:
    """A normalized generator of the annihilating left ideal."""

    element: QTorusElement

    @classmethod
    def normalize(cls, u: QTorusElement) -> "AqPolynomial":
        """Canonical representative of the left-unit class {+-t^k mu^s lambda^r u}."""
        if u.is_zero():
            raise ValueError("cannot normalize zero")
        lams = [a for _, a in u.terms]
        mus = [b for b, _ in u.terms]
        r = -((min(lams) + max(lams)) // 2)
        s = -((min(mus) + max(mus)) // 2)
        u = qt_mult(QTorusElement.monomial(s, r), u)
        rows = _lambda_left(u)
        coeffs = [c for row in rows.values() for c in row.values()]
        den = LaurentPoly.const(1)
        for c in coeffs:
            den = den * c.denominator.exact_div(den.gcd(c.denominator))
        g = LaurentPoly()
        for c in coeffs:
            g = g.gcd((c * den).num)
        unit = RationalFunction.from_lp(den) / RationalFunction.from_lp(g)
        top = rows[max(rows)]
        low = min(e for c in top.values() for e in (c * unit).num.terms)
        unit = unit * _t(-low)
        lead = (top[max(top)] * unit).num
        if lead.terms[lead.degree()] < 0:
            unit = -unit
        return cls(u.scale(unit))

    def lambda_left(self) -> dict[int, dict[int, RationalFunction]]:
        return _lambda_left(self.element)

    def to_text(self) -> str:
        """lambda^a * (c(mu)) summands, highest lambda first, mu to the right."""
        parts = []
        for a, row in sorted(self.lambda_left().items(), reverse=True):
            body = _mu_poly_text(row)
            lam = "l" if a == 1 else f"l^{a}"
            if not a:
                parts.append(f"({body})" if " " in body else body)
            elif body in ("1", "-1"):
                parts.append(body[:-1] + lam)
            else:
                parts.append(f"{lam} * ({body})")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> str:
        return json.dumps(
            {
                "text": self.to_text(),
                "normal_order": self.element.to_text(),
                "terms": json.loads(self.element.to_json())["terms"],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "AqPolynomial":
        return cls(QTorusElement.from_json(text))


def aq_from_lambda_left(coeffs: Mapping[int, Mapping[int, RationalFunction | int]]) -> QTorusElement:
    """Build sum_a lambda^a c_a(mu) from a -> {b: coefficient}."""
    return _from_lambda_left({a: {b: as_rf(c) for b, c in row.items()} for a, row in coeffs.items()})


def to_aq(e: Elimination) -> AqPolynomial:
    """Substitute L -> x_l, Lp -> (-t^3) x_lm, x -> x_m and normalize."""
    x_l, x_m, x_lm = boundary_generators()

    def at(poly: TracePoly) -> QTorusElement:
        deg = max((len(m) for m in poly.terms), default=0)
        return evaluate_polynomial([poly.terms.get((MERGED,) * n, ZERO) for n in range(deg + 1)], x_m)

    lp = x_lm.scale(_t(3, -1))
    g = qt_mult(x_l, at(e.p)) + qt_mult(lp, at(e.q)) + at(e.r)
    return AqPolynomial.normalize(g)


@lru_cache(maxsize=16)
def _aq_for(m: int, max_word_len: int) -> AqPolynomial:
    seeds = longitude_seeds(BraidWord(4, ((2, 1),) * m), max_word_len)
    return to_aq(eliminate_y(seeds.L, seeds.Lp, seeds.rs))


def aq_polynomial(b: BraidWord | str, max_word_len: int = DEFAULT_MAX_WORD_LEN) -> AqPolynomial:
    """Full pipeline: seeds, elimination, substitution, normalization."""
    if isinstance(b, str):
        b = parse_braid(b)
    m = sigma2_power(b)
    if m is None:
        raise UnsupportedFamily(f"{b} is not plat-equivalent to a power of sigma_2")
    longitude_seeds(b, max_word_len)  # raises for unsupported members
    return _aq_for(m, max_word_len)


# ---------------------------------------------------------------------------
# counit and recurrence


def counit_sequence(jones: Mapping[int, RationalFunction | LaurentPoly | int] | Sequence) -> Callable[[int], RationalFunction]:
    """f(a) = (-1)^a J^(a) for a >= 0, f(-1) = 0, f(-a-2) = -f(a)."""
    values = dict(jones.items()) if isinstance(jones, Mapping) else dict(enumerate(jones))

    def f(a: int) -> RationalFunction:
        if a == -1:
            return ZERO
        if a < -1:
            return -f(-a - 2)
        if a not in values:
            raise MissingSequenceValue(f"J^({a}) is not available")
        return as_rf(values[a]) * (-1) ** a

    return f


def mu_counit(u: QTorusElement) -> dict[int, RationalFunction]:
    """Apply the counit to mu only: a -> sum_b c_(b,a) t^(2b) on the mu-left normal form."""
    out: dict[int, RationalFunction] = {}
    for (b, a), c in sorted(u.terms.items()):
        out[a] = out.get(a, ZERO) + c * _t(2 * b)
    return {a: c for a, c in out.items() if not c.is_zero()}


def eval_counit(u: QTorusElement, f: Callable[[int], RationalFunction]) -> RationalFunction:
    """sum c_(b,a) t^(2b) f(a) over the mu-left normal form."""
    return sum((c * f(a) for a, c in sorted(mu_counit(u).items())), ZERO)


def colored_jones_from_recurrence(
    aq: AqPolynomial | QTorusElement, seeds: Sequence[RationalFunction | LaurentPoly | int], n: int
) -> RationalFunction:
    """J^(n) by solving eps(lambda^m aq) = 0 for the highest index, from J^(0), ..., J^(len(seeds)-1)."""
    element = aq.element if isinstance(aq, AqPolynomial) else aq
    values = {i: as_rf(v) for i, v in enumerate(seeds)}
    if n in values:
        return values[n]
    hi = max(a for _, a in element.terms)
    for target in range(len(values), n + 1):
        by_index = mu_counit(qt_mult(QTorusElement.monomial(0, target - hi), element))
        lead = by_index.pop(target, ZERO)
        if lead.is_zero():
            raise SingularLeadingCoefficient(f"leading coefficient vanishes at index {target}")
        f = counit_sequence(values)
        rest = sum((c * f(a) for a, c in by_index.items()), ZERO)
        values[target] = -rest / lead * (-1) ** target
    return values[n]


__all__ = [
    "UnsupportedFamily",
    "DegenerateElimination",
    "MissingSequenceValue",
    "SingularLeadingCoefficient",
    "Seeds",
    "LongitudePair",
    "Elimination",
    "AqPolynomial",
    "sigma2_power",
    "knot_relations",
    "longitude_seeds",
    "recurse",
    "longitude_sequence",
    "recurse_lambda",
    "eliminate_y",
    "to_aq",
    "aq_from_lambda_left",
    "aq_polynomial",
    "counit_sequence",
    "mu_counit",
    "eval_counit",
    "colored_jones_from_recurrence",
]
