"""Kauffman bracket of plat-closure diagrams, and colored Jones values by cabling.

Diagrams are drawn top to bottom.  A crossing between positions i and i+1
has incident segments ``nw, ne, sw, se``; for sigma_i the strand nw -> se
passes over, for sigma_i^-1 the strand ne -> sw does.  The A-smoothing opens
the regions swept by turning the over-strand counterclockwise.  Caps and cups
join segment ends permanently.

Two evaluators are provided: ``state_sum`` enumerates all 2^c smoothings;
``sweep`` processes crossings in order and keeps, for each partial state, the
connectivity of the segments still in play.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .braid_plat import BraidWord, parse_braid
from .coefficients import LaurentPoly
from .quantum_torus import chebyshev

MAX_CROSSINGS = 24
LOOP = LaurentPoly({2: -1, -2: -1})
TWIST = LaurentPoly.monomial(3, -1)

End = tuple[int, str]  # (segment, "top" | "bottom")


class TooLarge(ValueError):
    """The brute-force state sum would exceed the crossing budget."""


@dataclass(frozen=True)
class Crossing:
    kind: int  # +1 if nw -> se is over, -1 if ne -> sw is over
    nw: int
    ne: int
    sw: int
    se: int

    def smoothings(self) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
        """(A-smoothing joins, B-smoothing joins)."""
        horizontal = ((self.nw, self.ne), (self.sw, self.se))
        vertical = ((self.nw, self.sw), (self.ne, self.se))
        return (horizontal, vertical) if self.kind == 1 else (vertical, horizontal)

    def strands(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """(over, under), each as (segment entering from above, segment leaving below)."""
        a, b = (self.nw, self.se), (self.ne, self.sw)
        return (a, b) if self.kind == 1 else (b, a)

    def ends(self) -> tuple[int, int, int, int]:
        return (self.nw, self.ne, self.sw, self.se)


@dataclass
class PlanarDiagram:
    segments: int = 0
    crossings: list[Crossing] = field(default_factory=list)
    joins: list[tuple[End, End]] = field(default_factory=list)

    def new_segment(self) -> int:
        self.segments += 1
        return self.segments - 1

    def crossing_signs(self) -> list[int]:
        direction = self._directions()
        signs = []
        for c in self.crossings:
            (o_in, _), (u_in, _) = c.strands()
            do, du = direction[o_in], direction[u_in]
            # as drawn going down: nw -> se is (1, -1), ne -> sw is (-1, -1)
            over = (do, -do) if c.kind == 1 else (-do, -do)
            under = (-du, -du) if c.kind == 1 else (du, -du)
            signs.append(1 if over[0] * under[1] - over[1] * under[0] > 0 else -1)
        return signs

    @property
    def writhe(self) -> int:
        return sum(self.crossing_signs())

    @property
    def components(self) -> int:
        return len(self._traversals())

    def _directions(self) -> dict[int, int]:
        return {seg: d for path in self._traversals() for seg, d in path}

    def _traversals(self) -> list[list[tuple[int, int]]]:
        """Each component as a list of (segment, +1 downward / -1 upward)."""
        below: dict[int, int] = {}
        above: dict[int, int] = {}
        for c in self.crossings:
            for entering, leaving in c.strands():
                below[entering] = leaving
                above[leaving] = entering
        partner: dict[End, End] = {}
        for a, b in self.joins:
            partner[a] = b
            partner[b] = a
        seen: set[int] = set()
        paths = []
        for start in range(self.segments):
            if start in seen:
                continue
            path = []
            seg, d = start, 1
            while seg not in seen:
                seen.add(seg)
                path.append((seg, d))
                nxt = below.get(seg) if d == 1 else above.get(seg)
                if nxt is not None:
                    seg = nxt
                    continue
                other = partner.get((seg, "bottom" if d == 1 else "top"))
                if other is None:
                    raise ValueError(f"segment {seg} has a free end")
                seg, d = other[0], (1 if other[1] == "top" else -1)
            paths.append(path)
        return paths


class _Builder:
    """Builds a diagram row by row, tracking the segment at each position."""

    def __init__(self, width: int, caps: list[tuple[int, int]]):
        self.d = PlanarDiagram()
        self.cur = [self.d.new_segment() for _ in range(width)]
        self.cap_pairs(caps, "top")

    def cross(self, i: int, kind: int) -> None:
        """sigma_i^kind with 1-based i."""
        nw, ne = self.cur[i - 1], self.cur[i]
        sw, se = self.d.new_segment(), self.d.new_segment()
        self.d.crossings.append(Crossing(kind, nw, ne, sw, se))
        self.cur[i - 1], self.cur[i] = sw, se

    def cap_pairs(self, pairs: list[tuple[int, int]], where: str) -> None:
        for p, q in pairs:
            self.d.joins.append(((self.cur[p - 1], where), (self.cur[q - 1], where)))


def _nested_pairs(bridges: int, j: int) -> list[tuple[int, int]]:
    """Position pairs capped together in the j-parallel of 2k strands."""
    pairs = []
    for i in range(bridges):
        left, right = 2 * i * j, (2 * i + 1) * j
        pairs += [(left + r, right + j + 1 - r) for r in range(1, j + 1)]
    return pairs


def cable_word(b: BraidWord, j: int) -> list[tuple[int, int]]:
    """The braid letters of the j-parallel of ``b`` (each bundle crossing is j*j letters)."""
    out = []
    for i, s in b.letters:
        base = (i - 1) * j
        for a in range(j, 0, -1):
            for step in range(j):
                out.append((base + a + step, s))
    return out


def diagram_from_plat(b: BraidWord | str, strands: int = 4, *, parallel: int = 1, twists: int = 0) -> PlanarDiagram:
    """Plat closure of ``b``; optionally its ``parallel``-cable with full twists.

    ``twists`` full twists of the first bundle are inserted just below its
    cap, with positive letters for positive ``twists``.
    """
    if isinstance(b, str):
        b = parse_braid(b, strands)
    if b.strands % 2:
        raise ValueError("plat closures need an even number of strands")
    j = parallel
    width = b.strands * j
    pairs = _nested_pairs(b.bridges, j)
    builder = _Builder(width, pairs)
    twist_letter = 1 if twists > 0 else -1
    for _ in range(abs(twists)):
        for _ in range(j):
            for i in range(1, j):
                builder.cross(i, twist_letter)
    for i, s in cable_word(b, j):
        builder.cross(i, s)
    builder.cap_pairs(pairs, "bottom")
    return builder.d


# ---------------------------------------------------------------------------
# evaluation


def _a_power(n: int) -> LaurentPoly:
    return LaurentPoly.monomial(n)


def _loops(n: int, links: list[tuple[int, int]]) -> int:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = n
    for a, b in links:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps


def state_sum(d: PlanarDiagram) -> LaurentPoly:
    """Sum over all 2^c smoothings, in increasing state index."""
    c = len(d.crossings)
    if c > MAX_CROSSINGS:
        raise TooLarge(f"{c} crossings exceed the state-sum budget of {MAX_CROSSINGS}")
    base = [(a[0], b[0]) for a, b in d.joins]
    options = [x.smoothings() for x in d.crossings]
    counts: dict[tuple[int, int], int] = {}
    for state in product((0, 1), repeat=c):
        links = list(base)
        for choice, opts in zip(state, options):
            links.extend(opts[choice])
        key = (c - 2 * sum(state), _loops(d.segments, links))
        counts[key] = counts.get(key, 0) + 1
    total = LaurentPoly()
    for (a_exp, loops), mult in sorted(counts.items()):
        total = total + _a_power(a_exp) * LOOP**loops * mult
    return total


def sweep(d: PlanarDiagram) -> LaurentPoly:
    """Bracket by processing crossings in order with connectivity states."""
    parent = list(range(d.segments))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in d.joins:
        ra, rb = find(a[0]), find(b[0])
        if ra != rb:
            parent[ra] = rb
    node = [find(s) for s in range(d.segments)]
    touched = {node[e] for c in d.crossings for e in c.ends()}
    free = len({n for n in node if n not in touched})
    last: dict[int, int] = {}
    for idx, c in enumerate(d.crossings):
        for e in c.ends():
            last[node[e]] = idx

    # a state is a tuple of (node, label) for open nodes, labels canonical
    states: dict[tuple[tuple[int, int], ...], LaurentPoly] = {(): LaurentPoly.const(1)}
    for idx, c in enumerate(d.crossings):
        ends = [node[e] for e in c.ends()]
        closing = {n for n in ends if last[n] == idx}
        smooth = [[(node[a], node[b]) for a, b in joins] for joins in c.smoothings()]
        new_states: dict[tuple[tuple[int, int], ...], LaurentPoly] = {}
        for state, coeff in states.items():
            label = dict(state)
            for n in ends:
                label.setdefault(n, ("new", n))
            for weight, joins in zip((1, -1), smooth):
                lab = dict(label)
                for a, b in joins:
                    la, lb = lab[a], lab[b]
                    if la != lb:
                        for k, v in lab.items():
                            if v == lb:
                                lab[k] = la
                remaining = {k: v for k, v in lab.items() if k not in closing}
                closed = len(set(lab.values()) - set(remaining.values()))
                relabel: dict[object, int] = {}
                key = tuple((k, relabel.setdefault(remaining[k], len(relabel))) for k in sorted(remaining))
                term = coeff * _a_power(weight) * LOOP**closed
                new_states[key] = new_states.get(key, LaurentPoly()) + term
        states = new_states
    total = sum(states.values(), LaurentPoly())
    return total * LOOP**free


def kauffman_bracket(d: PlanarDiagram, method: str = "state_sum") -> LaurentPoly:
    if method == "state_sum":
        return state_sum(d)
    if method == "sweep":
        return sweep(d)
    raise ValueError(f"unknown method {method!r}")


def normalized_bracket(d: PlanarDiagram, method: str = "state_sum") -> LaurentPoly:
    """(-t^3)^(-writhe) times the bracket: invariant of the 0-framed link."""
    w = d.writhe
    return kauffman_bracket(d, method) * LaurentPoly.monomial(-3 * w, (-1) ** w)


def zero_framed_cable(b: BraidWord | str, j: int, strands: int = 4) -> PlanarDiagram:
    """The j-parallel of the plat closure with pairwise linking numbers zero."""
    if isinstance(b, str):
        b = parse_braid(b, strands)
    if j <= 1:
        return diagram_from_plat(b, parallel=max(j, 1))
    knot = diagram_from_plat(b)
    if knot.components != 1:
        raise ValueError("zero-framed cabling is implemented for knots")
    # each full twist on parallel strands changes every pairwise linking by -1
    return diagram_from_plat(b, parallel=j, twists=knot.writhe)


def parallel_value(b: BraidWord | str, j: int, method: str = "sweep", strands: int = 4) -> LaurentPoly:
    """Normalized bracket of the 0-framed j-parallel (1 for j = 0)."""
    if j == 0:
        return LaurentPoly.const(1)
    return normalized_bracket(zero_framed_cable(b, j, strands), method)


def colored_jones_oracle(
    b: BraidWord | str, n: int, method: str = "sweep", strands: int = 4, sign_convention: int = 1
) -> LaurentPoly:
    """sum_j c_j T_n-coefficients times the 0-framed j-parallel values.

    ``sign_convention=-1`` multiplies by (-1)^n.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    total = LaurentPoly()
    for j, c in enumerate(chebyshev(n)):
        if c:
            total = total + parallel_value(b, j, method, strands) * c
    return total * (sign_convention**n)


__all__ = [
    "Crossing",
    "PlanarDiagram",
    "TooLarge",
    "MAX_CROSSINGS",
    "diagram_from_plat",
    "cable_word",
    "state_sum",
    "sweep",
    "kauffman_bracket",
    "normalized_bracket",
    "zero_framed_cable",
    "parallel_value",
    "colored_jones_oracle",
]
