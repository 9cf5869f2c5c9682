"""Words in the ribbon generators alpha_i and the skein module they span.

Elements of the skein module are trace-ring combinations of the basis
alpha_I (I increasing, the empty I being the unit).  Coefficients always sit
on the left and words act on the right, one letter at a time.  The right
action of alpha_i on alpha_I only depends on the labels of I below i, the
label i itself, and the block Q of labels above i; collapsing Q to a single
puncture reduces every case to the two-puncture matrices.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .coefficients import LaurentPoly, RationalFunction
from .trace_ring import ONE_TP, ZERO_TP, TracePoly, gen_key

Basis = tuple[int, ...]
Letter = tuple[int, int]


class IndexOutOfRange(ValueError):
    """A letter refers to a puncture outside 1..k."""


class UnsupportedArity(ValueError):
    """The displayed action matrices only exist for two punctures."""


def _t(n: int, c: int = 1) -> RationalFunction:
    return RationalFunction.t_power(n, c)


TWIST = LaurentPoly.monomial(3, -1)  # the kink scalar -t^3
LOOP = LaurentPoly({2: -1, -2: -1})  # value of a trivial circle


@dataclass(frozen=True)
class AlphaWord:
    letters: tuple[Letter, ...] = ()
    framing: int = 0

    def __post_init__(self) -> None:
        for i, s in self.letters:
            if s not in (1, -1) or i < 1:
                raise ValueError(f"bad letter {(i, s)}")

    def __mul__(self, other: "AlphaWord") -> "AlphaWord":
        return AlphaWord(self.letters + other.letters, self.framing + other.framing)

    def inverse(self) -> "AlphaWord":
        return AlphaWord(tuple((i, -s) for i, s in reversed(self.letters)), -self.framing)

    def max_index(self) -> int:
        return max((i for i, _ in self.letters), default=0)

    def reduced(self) -> "AlphaWord":
        """Cancel adjacent inverse pairs."""
        out: list[Letter] = []
        for i, s in self.letters:
            if out and out[-1] == (i, -s):
                out.pop()
            else:
                out.append((i, s))
        return AlphaWord(tuple(out), self.framing)

    def substitute_inverse(self, index: int) -> "AlphaWord":
        """Replace alpha_index by its inverse throughout."""
        return AlphaWord(
            tuple((i, -s if i == index else s) for i, s in self.letters), self.framing
        )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        body = " ".join(f"a{i}" if s == 1 else f"a{i}^-1" for i, s in self.letters)
        if self.framing:
            body = f"{body} f={self.framing}".strip()
        return body

    @classmethod
    def parse(cls, text: str) -> "AlphaWord":
        letters: list[Letter] = []
        framing = 0
        for pos, tok in enumerate(text.split()):
            m = re.fullmatch(r"a(\d+)(?:\^(-?\d+))?", tok)
            if m:
                i, n = int(m.group(1)), int(m.group(2) or 1)
                letters += [(i, 1 if n > 0 else -1)] * abs(n)
                continue
            m = re.fullmatch(r"f=(-?\d+)", tok)
            if m:
                framing += int(m.group(1))
                continue
            raise ValueError(f"cannot parse word token {tok!r} at position {pos}")
        return cls(tuple(letters), framing)


def basis_name(basis: Basis) -> str:
    return "1" if not basis else "a" + "".join(str(i) for i in basis)


class SkeinElement:
    """Immutable finite combination sum_I c_I alpha_I with trace-ring c_I."""

    __slots__ = ("coords",)

    def __init__(self, coords: Mapping[Basis, TracePoly] | None = None):
        self.coords: dict[Basis, TracePoly] = {
            b: c for b, c in (coords or {}).items() if not c.is_zero()
        }

    @classmethod
    def basis(cls, indices: Iterable[int] = ()) -> "SkeinElement":
        return cls({tuple(indices): ONE_TP})

    @classmethod
    def scalar(cls, c: TracePoly) -> "SkeinElement":
        return cls({(): c})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(frozenset(self.coords.items()))

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        out = dict(self.coords)
        for b, c in other.coords.items():
            out[b] = out.get(b, ZERO_TP) + c
        return SkeinElement(out)

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        return self + other.scale(TracePoly.const(-1))

    def __neg__(self) -> "SkeinElement":
        return self.scale(TracePoly.const(-1))

    def scale(self, c: TracePoly | RationalFunction | LaurentPoly | int) -> "SkeinElement":
        if not isinstance(c, TracePoly):
            c = TracePoly.const(c)
        return SkeinElement({b: c * v for b, v in self.coords.items()})

    def coefficient(self, basis: Iterable[int]) -> TracePoly:
        return self.coords.get(tuple(basis), ZERO_TP)

    def is_zero(self) -> bool:
        return not self.coords

    def to_text(self, y_name: bool = False) -> str:
        if not self.coords:
            return "0"
        parts = []
        for b in sorted(self.coords, key=gen_key):
            c = self.coords[b]
            if not b:
                parts.append(c.to_text(y_name))
            elif c == ONE_TP:
                parts.append(basis_name(b))
            else:
                parts.append(f"({c.to_text(y_name)})*{basis_name(b)}")
        return " + ".join(parts)

    def to_json(self) -> str:
        terms = [{"basis": list(b), "coeff": self.coords[b].to_text()} for b in sorted(self.coords, key=gen_key)]
        return json.dumps({"terms": terms, "text": self.to_text()})

    @classmethod
    def from_json(cls, text: str) -> "SkeinElement":
        data = json.loads(text)
        return cls({tuple(d["basis"]): TracePoly.parse(d["coeff"]) for d in data["terms"]})

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"SkeinElement({self})"


# ---------------------------------------------------------------------------
# right action of a single letter


def _x(idx: Iterable[int]) -> TracePoly:
    return TracePoly.gen(tuple(sorted(idx)))


@lru_cache(maxsize=None)
def _act_basis(basis: Basis, i: int) -> tuple[tuple[Basis, TracePoly], ...]:
    """alpha_basis * alpha_i as a list of (basis, coefficient)."""
    below = tuple(j for j in basis if j < i)
    above = tuple(j for j in basis if j > i)
    has_i = i in basis
    with_i = below + (i,)
    if not above:
        if not has_i:
            return ((with_i, ONE_TP),)
        return (
            (below, TracePoly.const(_t(-4, -1))),
            (basis, _x([i]).scale(_t(-2, -1))),
        )
    x_q = _x(above)
    if not has_i:
        return (
            (below, (_x([i]) * x_q).scale(_t(-4, -1)) + _x((i,) + above).scale(_t(-6, -1))),
            (with_i, x_q.scale(_t(-2, -1))),
            (below + above, _x([i]).scale(_t(-2, -1))),
            (with_i + above, TracePoly.const(_t(-4, -1))),
        )
    return (
        (below, x_q.scale(_t(-2))),
        (with_i, _x((i,) + above).scale(_t(-2, -1))),
        (below + above, ONE_TP),
    )


def act(elem: SkeinElement, letter: Letter, k: int | None = None) -> SkeinElement:
    """Right multiplication by alpha_i (sign +1) or its inverse (sign -1)."""
    i, sign = letter
    if k is not None and not 1 <= i <= k:
        raise IndexOutOfRange(f"letter a{i} outside punctures 1..{k}")
    out: dict[Basis, TracePoly] = {}
    for b, c in elem.coords.items():
        for nb, nc in _act_basis(b, i):
            term = c * nc
            prev = out.get(nb)
            out[nb] = term if prev is None else prev + term
    forward = SkeinElement(out)
    if sign == 1:
        return forward
    # alpha_i^-1 = -t^2 x_i - t^4 alpha_i, with x_i central
    return elem.scale(_x([i]).scale(_t(2, -1))) + forward.scale(_t(4, -1))


def act_word(elem: SkeinElement, word: AlphaWord, k: int | None = None) -> SkeinElement:
    for letter in word.letters:
        elem = act(elem, letter, k)
    if word.framing:
        elem = elem.scale(RationalFunction.from_lp(TWIST**word.framing))
    return elem


def straighten(word: AlphaWord | str, k: int | None = None) -> SkeinElement:
    """Expand a word in the basis alpha_I, scaled by (-t^3)^framing."""
    if isinstance(word, str):
        word = AlphaWord.parse(word)
    if k is not None and word.max_index() > k:
        raise IndexOutOfRange(f"word {word} uses punctures beyond {k}")
    return act_word(SkeinElement.basis(), word, k)


def right_action_matrix(i: int, k: int = 2) -> list[list[TracePoly]]:
    """Matrix of right multiplication by alpha_i on (1, a1, a2, a12)."""
    if k != 2:
        raise UnsupportedArity("action matrices are only tabulated for two punctures")
    if i not in (1, 2):
        raise IndexOutOfRange(f"no generator a{i} for two punctures")
    order: list[Basis] = [(), (1,), (2,), (1, 2)]
    rows = []
    for b in order:
        image = act(SkeinElement.basis(b), (i, 1))
        rows.append([image.coefficient(c) for c in order])
    return rows


def inverse_action_matrix(i: int, k: int = 2) -> list[list[TracePoly]]:
    """Matrix of right multiplication by alpha_i^-1, built as -t^2 x_i I - t^4 A_i."""
    forward = right_action_matrix(i, k)
    xi = _x([i]).scale(_t(2, -1))
    return [
        [(xi if r == c else ZERO_TP) + forward[r][c].scale(_t(4, -1)) for c in range(4)]
        for r in range(4)
    ]


def matrix_mul(a: list[list[TracePoly]], b: list[list[TracePoly]]) -> list[list[TracePoly]]:
    n = len(a)
    return [
        [sum((a[r][m] * b[m][c] for m in range(n)), ZERO_TP) for c in range(len(b[0]))]
        for r in range(n)
    ]


TABULATED_ACTION = {
    1: (
        ("0", "1", "0", "0"),
        ("-t^-4", "-t^-2*x1", "0", "0"),
        ("-t^-4*x1*x2 - t^-6*x12", "-t^-2*x2", "-t^-2*x1", "-t^-4"),
        ("t^-2*x2", "-t^-2*x12", "1", "0"),
    ),
    2: (
        ("0", "0", "1", "0"),
        ("0", "0", "0", "1"),
        ("-t^-4", "0", "-t^-2*x2", "0"),
        ("0", "-t^-4", "0", "-t^-2*x2"),
    ),
}


def tabulated_action_matrix(i: int, sign: int = 1) -> list[list[TracePoly]]:
    """The stored two-puncture matrix of alpha_i (sign 1) or alpha_i^-1 (sign -1)."""
    forward = [[TracePoly.parse(c) for c in row] for row in TABULATED_ACTION[i]]
    if sign == 1:
        return forward
    xi = _x([i]).scale(_t(2, -1))
    return [
        [(xi if r == c else ZERO_TP) + forward[r][c].scale(_t(4, -1)) for c in range(4)]
        for r in range(4)
    ]


def straighten_by_matrices(word: AlphaWord | str) -> SkeinElement:
    """Two-puncture straightening by multiplying the stored action matrices."""
    if isinstance(word, str):
        word = AlphaWord.parse(word)
    if word.max_index() > 2:
        raise UnsupportedArity("action matrices are only tabulated for two punctures")
    order: list[Basis] = [(), (1,), (2,), (1, 2)]
    row = [ONE_TP, ZERO_TP, ZERO_TP, ZERO_TP]
    for i, s in word.letters:
        m = tabulated_action_matrix(i, s)
        row = [sum((row[r] * m[r][c] for r in range(4)), ZERO_TP) for c in range(4)]
    out = SkeinElement(dict(zip(order, row)))
    if word.framing:
        out = out.scale(RationalFunction.from_lp(TWIST**word.framing))
    return out


# ---------------------------------------------------------------------------
# multiplication and trace


def _act_generator(elem: SkeinElement, g: tuple[int, ...]) -> SkeinElement:
    """Right multiplication by the loop element x_g = -t^2 alpha_g - t^-2 alpha_g^-1."""
    if len(g) == 1:
        return elem.scale(_x(g))
    word = AlphaWord(tuple((i, 1) for i in g))
    return act_word(elem, word).scale(_t(2, -1)) + act_word(elem, word.inverse()).scale(
        _t(-2, -1)
    )


def _act_coefficient(elem: SkeinElement, c: TracePoly) -> SkeinElement:
    out = SkeinElement()
    for mono, value in c.terms.items():
        term = elem.scale(TracePoly.const(value))
        for g in mono:
            term = _act_generator(term, g)
        out = out + term
    return out


def mult(a: SkeinElement, b: SkeinElement) -> SkeinElement:
    """The product a*b: b's basis words and trace coefficients act on a from the right."""
    out = SkeinElement()
    for basis, coef in b.coords.items():
        part = _act_coefficient(a, coef)
        part = act_word(part, AlphaWord(tuple((i, 1) for i in basis)))
        out = out + part
    return out


def _rewrite_at(letters: tuple[Letter, ...], pos: int) -> list[tuple[tuple[Letter, ...], TracePoly]] | None:
    """Apply a straightening rule at ``pos``, or None if none applies there."""
    i, s = letters[pos]
    head, tail = letters[:pos], letters[pos + 1 :]
    if s == -1:
        # alpha_i^-1 = -t^2 x_i - t^4 alpha_i
        return [(head + tail, _x([i]).scale(_t(2, -1))), (head + ((i, 1),) + tail, TracePoly.const(_t(4, -1)))]
    if pos + 1 >= len(letters) or letters[pos + 1][1] == -1 or letters[pos + 1][0] > i:
        return None
    j = letters[pos + 1][0]
    tail = letters[pos + 2 :]
    if j == i:
        # alpha_i alpha_i = -t^-4 - t^-2 x_i alpha_i
        return [(head + tail, TracePoly.const(_t(-4, -1))), (head + ((i, 1),) + tail, _x([i]).scale(_t(-2, -1)))]
    # alpha_i alpha_j with j < i
    return [
        (head + tail, (_x([i]) * _x([j])).scale(_t(-4, -1)) + _x([j, i]).scale(_t(-6, -1))),
        (head + ((j, 1),) + tail, _x([i]).scale(_t(-2, -1))),
        (head + ((i, 1),) + tail, _x([j]).scale(_t(-2, -1))),
        (head + ((j, 1), (i, 1)) + tail, TracePoly.const(_t(-4, -1))),
    ]


def straighten_by_rewriting(word: AlphaWord | str, strategy: str = "leftmost") -> SkeinElement:
    """Straighten with the three word rules, always rewriting the leftmost or rightmost redex."""
    if isinstance(word, str):
        word = AlphaWord.parse(word)
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    pending: dict[tuple[Letter, ...], TracePoly] = {word.letters: ONE_TP}
    done: dict[Basis, TracePoly] = {}
    while pending:
        letters, coeff = pending.popitem()
        positions = range(len(letters)) if strategy == "leftmost" else range(len(letters) - 1, -1, -1)
        for pos in positions:
            image = _rewrite_at(letters, pos)
            if image is not None:
                break
        else:
            basis = tuple(i for i, _ in letters)
            done[basis] = done.get(basis, ZERO_TP) + coeff
            continue
        for new, c in image:
            pending[new] = pending.get(new, ZERO_TP) + coeff * c
    out = SkeinElement(done)
    if word.framing:
        out = out.scale(RationalFunction.from_lp(TWIST**word.framing))
    return out


def trace_q(a: SkeinElement) -> TracePoly:
    """Close up the ribbon: tr(1) = -t^2 - t^-2 and tr(alpha_I) = x_I."""
    total = ZERO_TP
    for b, c in a.coords.items():
        total = total + (c.scale(LOOP) if not b else c * _x(b))
    return total


def trace_word(word: AlphaWord | str, k: int | None = None) -> TracePoly:
    return trace_q(straighten(word, k))


__all__ = [
    "AlphaWord",
    "SkeinElement",
    "IndexOutOfRange",
    "UnsupportedArity",
    "TWIST",
    "LOOP",
    "act",
    "act_word",
    "straighten",
    "straighten_by_matrices",
    "tabulated_action_matrix",
    "TABULATED_ACTION",
    "straighten_by_rewriting",
    "right_action_matrix",
    "inverse_action_matrix",
    "matrix_mul",
    "mult",
    "trace_q",
    "trace_word",
    "basis_name",
]
