"""Braid words on 2k strands, their push-down action on free loops, and plat moves.

Loops in the 2k-punctured disk are words in free generators y_1..y_2k.  A
braid acts letter by letter: sigma_i sends y_i to y_(i+1) and y_(i+1) to
y_(i+1)^-1 y_i y_(i+1).  Capping strands 2i-1 and 2i at the bottom identifies
y_(2i) with the inverse of y_(2i-1), which is the map ``varpi`` into words in
the ribbon generators alpha_i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .skein_word import AlphaWord

FreeLetter = tuple[int, int]


class ParseError(ValueError):
    """Malformed braid text."""


class InapplicableMove(ValueError):
    """A plat move was requested at a position where it does not exist."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for i, s in self.letters:
            if not 1 <= i < self.strands or s not in (1, -1):
                raise ParseError(f"generator s{i} not valid on {self.strands} strands")

    @property
    def bridges(self) -> int:
        return self.strands // 2

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        strands = max(self.strands, other.strands)
        return BraidWord(strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def writhe(self) -> int:
        return sum(s for _, s in self.letters)

    def __str__(self) -> str:
        return " ".join(f"s{i}" if s == 1 else f"s{i}^-1" for i, s in self.letters)


def parse_braid(text: str, strands: int = 4) -> BraidWord:
    """Parse 's2 s1^-1 ...' or signed integers '2 -1 ...'."""
    letters = []
    for pos, tok in enumerate(text.replace(",", " ").split()):
        m = re.fullmatch(r"s(\d+)(?:\^(-?\d+))?", tok)
        if m:
            i, n = int(m.group(1)), int(m.group(2) or 1)
        elif re.fullmatch(r"-?\d+", tok) and tok not in ("0", "-0"):
            i, n = abs(int(tok)), (1 if int(tok) > 0 else -1)
        else:
            raise ParseError(f"bad braid token {tok!r} at position {pos}")
        if not 1 <= i < strands:
            raise ParseError(f"generator s{i} at position {pos} out of range for {strands} strands")
        if n == 0:
            continue
        letters += [(i, 1 if n > 0 else -1)] * abs(n)
    return BraidWord(strands, tuple(letters))


def free_reduce(word: list[FreeLetter] | tuple[FreeLetter, ...]) -> tuple[FreeLetter, ...]:
    out: list[FreeLetter] = []
    for g, e in word:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def _letter_image(i: int, s: int, g: int) -> tuple[FreeLetter, ...]:
    if s == 1:
        if g == i:
            return ((i + 1, 1),)
        if g == i + 1:
            return ((i + 1, -1), (i, 1), (i + 1, 1))
    else:
        if g == i + 1:
            return ((i, 1),)
        if g == i:
            return ((i, 1), (i + 1, 1), (i, -1))
    return ((g, 1),)


def push_down(b: BraidWord, w: tuple[FreeLetter, ...]) -> tuple[FreeLetter, ...]:
    """Act on a free word by the braid, one generator at a time."""
    for i, s in b.letters:
        out: list[FreeLetter] = []
        for g, e in w:
            img = _letter_image(i, s, g)
            if e == -1:
                img = tuple((h, -f) for h, f in reversed(img))
            out.extend(img)
        w = free_reduce(out)
    return w


def delta(i: int, k: int) -> tuple[FreeLetter, ...]:
    """The loop around the i-th pair of punctures, y_(2i-1) y_(2i)."""
    if not 1 <= i <= k:
        raise ValueError(f"pair {i} out of range 1..{k}")
    return ((2 * i - 1, 1), (2 * i, 1))


def varpi(w: tuple[FreeLetter, ...], k: int | None = None) -> AlphaWord:
    """Cap off puncture pairs: y_(2i-1) -> alpha_i and y_(2i) -> alpha_i^-1."""
    letters = []
    for g, e in w:
        if k is not None and not 1 <= g <= 2 * k:
            raise ValueError(f"free generator y{g} outside 1..{2 * k}")
        letters.append(((g + 1) // 2, e if g % 2 == 1 else -e))
    return AlphaWord(tuple(letters)).reduced()


def relation_words(b: BraidWord, framing: int = 0) -> list[AlphaWord]:
    """r_j = varpi(b . delta(j)) for j = 1..k, each tagged with ``framing``."""
    if b.strands % 2:
        raise ValueError("plat closures need an even number of strands")
    k = b.bridges
    out = []
    for j in range(1, k + 1):
        word = varpi(push_down(b, delta(j, k)), k)
        out.append(AlphaWord(word.letters, framing))
    return out


def plat_permutation_components(b: BraidWord) -> int:
    """Number of components of the plat closure."""
    bottom = list(range(b.strands))  # bottom[q] = top position of the strand ending at q
    for i, _ in b.letters:
        bottom[i - 1], bottom[i] = bottom[i], bottom[i - 1]
    parent = list(range(b.strands))

    def find(p: int) -> int:
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for m in range(0, b.strands, 2):
        parent[find(m)] = find(m + 1)
        parent[find(bottom[m])] = find(bottom[m + 1])
    return len({find(p) for p in range(b.strands)})


def plat_move(b: BraidWord, move: str, side: str = "left", i: int = 1) -> BraidWord:
    """Apply one of the plat moves P1..P4 to ``b``."""
    n = b.strands
    if side not in ("left", "right"):
        raise InapplicableMove(f"side must be left or right, not {side!r}")
    if move == "P1":
        piece = ((1, 1),)
    elif move == "P2":
        if not 1 <= i or 2 * i + 1 >= n:
            raise InapplicableMove(f"P2 needs 1 <= i and 2i+1 < {n}")
        piece = ((2 * i, 1), (2 * i + 1, 1), (2 * i - 1, 1), (2 * i, 1))
    elif move == "P3":
        if n < 4:
            raise InapplicableMove("P3 needs at least four strands")
        piece = ((2, 1), (1, 1), (1, 1), (2, 1))
    elif move == "P4":
        k = b.bridges
        return BraidWord(n + 2, ((2 * k, 1),) + b.letters)
    else:
        raise InapplicableMove(f"unknown move {move!r}")
    letters = piece + b.letters if side == "left" else b.letters + piece
    return BraidWord(n, letters)


def _move_pieces(strands: int) -> list[tuple[tuple[int, int], ...]]:
    pieces = [((1, 1),), ((2, 1), (1, 1), (1, 1), (2, 1))] if strands >= 4 else [((1, 1),)]
    for i in range(1, strands // 2):
        if 2 * i + 1 < strands:
            pieces.append(((2 * i, 1), (2 * i + 1, 1), (2 * i - 1, 1), (2 * i, 1)))
    inverses = [tuple((i, -s) for i, s in reversed(p)) for p in pieces]
    return pieces + inverses


def plat_reduce(b: BraidWord) -> BraidWord:
    """Undo plat moves at either end of ``b`` until none applies.

    Removes free cancellations, P1..P3 pieces and their inverses at the start
    or end of the word, and destabilizes a P4 stabilization.  The plat closure
    is unchanged at every step.
    """
    strands, letters = b.strands, list(b.letters)
    changed = True
    while changed:
        changed = False
        reduced = list(free_reduce(letters))
        if reduced != letters:
            letters, changed = reduced, True
        for piece in sorted(_move_pieces(strands), key=len, reverse=True):
            n = len(piece)
            if len(letters) >= n and tuple(letters[:n]) == piece:
                letters, changed = letters[n:], True
                break
            if len(letters) >= n and tuple(letters[-n:]) == piece:
                letters, changed = letters[:-n], True
                break
        if changed:
            continue
        top = strands - 2
        if strands >= 6 and letters and letters[0][0] == top and all(i < top for i, _ in letters[1:]):
            letters, strands, changed = letters[1:], strands - 2, True
    return BraidWord(strands, tuple(letters))


__all__ = [
    "plat_reduce",
    "BraidWord",
    "ParseError",
    "InapplicableMove",
    "parse_braid",
    "free_reduce",
    "push_down",
    "delta",
    "varpi",
    "relation_words",
    "plat_permutation_components",
    "plat_move",
]
