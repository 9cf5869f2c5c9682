"""Trace relations of a plat-presented knot or link and reduction modulo them.

For each plat relation word r and its inverse, and reduced alpha words u, v
with |u| + |v| <= max_word_len, the difference tr(u r v) - tr(v u) is a
relation (``family="cyclic"``).  ``family="left"`` uses tr(r u) - tr(u) only.
Relations are kept in generation order: by |u| + |v|, then relation index,
then r before r^-1, then u and v shortest first.

``normal_form`` rewrites y^n (y = x12) times any x-monomial with a rule
y^n -> tail(x, y) of lower y-degree.  Candidates for a rule are relations whose
only top y-degree monomial is the pure power y^n with coefficient +-t^k.  After
reduction by the rules of lower degree, the candidate whose tail has the
smallest spread of t-exponents wins, ties going to the earliest relation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .braid_plat import BraidWord, parse_braid, plat_move, plat_permutation_components, relation_words
from .coefficients import ONE, LaurentPoly, RationalFunction
from .skein_word import AlphaWord, trace_word
from .trace_ring import Y, Monomial, TracePoly, merge_knot_variables, mono_key

DEFAULT_MAX_WORD_LEN = 4
PRESENTATIONS = ("p1", "plain")
FAMILIES = ("cyclic", "left")


@dataclass(frozen=True)
class RelationSet:
    relations: tuple[TracePoly, ...]
    bridges: int
    knot: bool
    braid: str = ""
    max_word_len: int = DEFAULT_MAX_WORD_LEN
    presentation: str = "p1"
    family: str = "cyclic"

    def variables(self) -> list[str]:
        if self.knot:
            return ["x", "y"]
        singles = [f"x{i}" for i in range(1, self.bridges + 1)]
        return singles + (["y"] if self.bridges == 2 else [])

    def to_json(self) -> str:
        return json.dumps(
            {
                "braid": self.braid,
                "bridges": self.bridges,
                "knot": self.knot,
                "max_word_len": self.max_word_len,
                "presentation": self.presentation,
                "family": self.family,
                "variables": self.variables(),
                "relations": [r.to_text(True) for r in self.relations],
            },
            indent=2,
        )

    @classmethod
    def from_json(cls, text: str) -> "RelationSet":
        data = json.loads(text)
        return cls(
            tuple(TracePoly.parse(r) for r in data["relations"]),
            data["bridges"],
            data["knot"],
            data.get("braid", ""),
            data.get("max_word_len", DEFAULT_MAX_WORD_LEN),
            data.get("presentation", "p1"),
            data.get("family", "cyclic"),
        )


def reduced_words(k: int, max_len: int) -> list[AlphaWord]:
    """All freely reduced alpha words of length <= max_len, shortest first."""
    letters = [(i, s) for i in range(1, k + 1) for s in (1, -1)]
    out: list[tuple] = [()]
    layer: list[tuple] = [()]
    for _ in range(max_len):
        layer = [w + (a,) for w in layer for a in letters if not w or w[-1] != (a[0], -a[1])]
        out.extend(layer)
    return [AlphaWord(w) for w in out]


def presented_braid(b: BraidWord, presentation: str = "p1") -> BraidWord:
    """The braid whose plat relation words are used for ``b``.

    ``p1`` appends sigma_1 on the right, which has the same plat closure and
    replaces alpha_1 by its inverse in every relation word.
    """
    if presentation == "p1":
        return plat_move(b, "P1", "right")
    if presentation == "plain":
        return b
    raise ValueError(f"unknown presentation {presentation!r}; expected one of {PRESENTATIONS}")


def _primitive(p: TracePoly) -> TracePoly:
    """Scale to integral coprime Laurent coefficients with a positive leading term."""
    den = LaurentPoly.const(1)
    for c in p.terms.values():
        d = c.denominator
        den = den * d.exact_div(den.gcd(d))
    scaled = {m: (c * den).num for m, c in p.terms.items()}
    g = LaurentPoly()
    for c in scaled.values():
        g = g.gcd(c)
    lead = max(scaled, key=_order)
    lc = scaled[lead].exact_div(g)
    unit = -1 if lc.terms[lc.degree()] < 0 else 1
    return TracePoly._raw(
        {m: RationalFunction.from_lp(c.exact_div(g).shift(-lc.val) * unit) for m, c in scaled.items()}
    )


def _order(m: Monomial) -> tuple:
    return (m.count(Y), len(m), mono_key(m))


def _word_pairs(words: list[AlphaWord], total: int, family: str):
    if family == "left":
        for u in words:
            if len(u) == total:
                yield AlphaWord(), u
        return
    for u in words:
        if len(u) > total:
            break
        for v in words:
            if len(u) + len(v) == total:
                yield u, v
            elif len(u) + len(v) > total:
                break


def generate_relations(
    b: BraidWord | str,
    max_word_len: int = DEFAULT_MAX_WORD_LEN,
    *,
    components: int | None = None,
    presentation: str = "p1",
    family: str = "cyclic",
    framing: int = 0,
) -> RelationSet:
    if isinstance(b, str):
        b = parse_braid(b)
    if max_word_len < 0:
        raise ValueError("max_word_len must be non-negative")
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if components is None:
        components = plat_permutation_components(b)
    knot = components == 1
    k = b.bridges
    rwords = relation_words(presented_braid(b, presentation), framing)
    cache: dict[AlphaWord, TracePoly] = {}

    def tr(w: AlphaWord) -> TracePoly:
        if w not in cache:
            value = trace_word(w, k)
            cache[w] = merge_knot_variables(value) if knot else value
        return cache[w]

    words = reduced_words(k, max_word_len)
    seen: set[TracePoly] = set()
    rels: list[TracePoly] = []
    for total in range(max_word_len + 1):
        for r in rwords:
            for rr in (r, r.inverse()):
                for u, v in _word_pairs(words, total, family):
                    rel = tr(u * rr * v) - tr(v * u)
                    if rel.is_zero():
                        continue
                    rel = _primitive(rel)
                    if rel not in seen:
                        seen.add(rel)
                        rels.append(rel)
    return RelationSet(tuple(rels), k, knot, str(b), max_word_len, presentation, family)


# ---------------------------------------------------------------------------
# reduction


def y_degree(p: TracePoly) -> int:
    return max((m.count(Y) for m in p.terms), default=0)


def _t_spread(p: TracePoly) -> int:
    exps = [e for c in p.terms.values() for part in (c.num, c.denominator) for e in part.terms]
    return max(exps) - min(exps) if exps else 0


@dataclass
class ReductionSystem:
    rules: dict[int, TracePoly]  # n -> what y^n is rewritten to

    def normal_form(self, p: TracePoly) -> TracePoly:
        lowest = min(self.rules, default=None)
        while True:
            top = y_degree(p)
            if lowest is None or top < lowest:
                return p
            # y^n divides y^top for every rule n <= top; use the largest
            n = max(d for d in self.rules if d <= top)
            head: dict[Monomial, RationalFunction] = {}
            rest: dict[Monomial, RationalFunction] = {}
            for m, c in p.terms.items():
                if m.count(Y) == top:
                    head[tuple(g for g in m if g != Y) + (Y,) * (top - n)] = c
                else:
                    rest[m] = c
            p = TracePoly._raw(rest)
            tail = self.rules[n]
            for m, c in head.items():
                p = p + tail * TracePoly._raw({m: c})


def _rule_candidate(rel: TracePoly) -> tuple[int, TracePoly] | None:
    n = y_degree(rel)
    power = (Y,) * n
    if n == 0 or [m for m in rel.terms if m.count(Y) == n] != [power]:
        return None
    lead = rel.terms[power]
    if not (lead.is_laurent() and lead.num.is_monomial()):
        return None
    tail = TracePoly._raw({m: c for m, c in rel.terms.items() if m != power})
    return n, tail.scale(-(ONE / lead))


def build_reduction_system(rs: RelationSet) -> ReductionSystem:
    by_degree: dict[int, list[TracePoly]] = {}
    for rel in rs.relations:
        cand = _rule_candidate(rel)
        if cand is not None:
            by_degree.setdefault(cand[0], []).append(cand[1])
    system = ReductionSystem({})
    for n in sorted(by_degree):
        best = None
        for tail in by_degree[n]:
            reduced = system.normal_form(tail)
            if best is None or _t_spread(reduced) < _t_spread(best):
                best = reduced
        system.rules[n] = best
    return system


@lru_cache(maxsize=32)
def reduction_system(rs: RelationSet) -> ReductionSystem:
    return build_reduction_system(rs)


def normal_form(p: TracePoly, rs: RelationSet) -> TracePoly:
    return reduction_system(rs).normal_form(p)


def contains(rs: RelationSet, p: TracePoly) -> bool:
    """Whether ``p`` reduces to zero under the selected rules."""
    return normal_form(p, rs).is_zero()


__all__ = [
    "DEFAULT_MAX_WORD_LEN",
    "PRESENTATIONS",
    "FAMILIES",
    "RelationSet",
    "ReductionSystem",
    "reduced_words",
    "presented_braid",
    "generate_relations",
    "build_reduction_system",
    "reduction_system",
    "normal_form",
    "contains",
    "y_degree",
]
