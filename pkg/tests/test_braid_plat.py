import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from platskein.braid_plat import (
    BraidWord,
    InapplicableMove,
    ParseError,
    delta,
    free_reduce,
    parse_braid,
    plat_move,
    plat_permutation_components,
    plat_reduce,
    push_down,
    relation_words,
    varpi,
)
from platskein.skein_word import AlphaWord

SIGMA2 = BraidWord(4, ((2, 1),))
TREFOIL = parse_braid("s2 s2 s2")


def y(*pairs):
    return tuple(pairs)


def test_parse():
    assert TREFOIL == BraidWord(4, ((2, 1),) * 3)
    assert parse_braid("2 -1") == BraidWord(4, ((2, 1), (1, -1)))
    assert parse_braid("s2^-2") == BraidWord(4, ((2, -1), (2, -1)))
    assert parse_braid("") == BraidWord(4)
    with pytest.raises(ParseError):
        parse_braid("s9")
    with pytest.raises(ParseError):
        parse_braid("q1")


def test_push_down_examples():
    assert push_down(SIGMA2, y((1, 1), (2, 1))) == y((1, 1), (3, 1))
    assert push_down(SIGMA2, y((1, 1), (3, 1))) == y((1, 1), (3, -1), (2, 1), (3, 1))
    w = y((2, 1), (4, -1))
    assert push_down(BraidWord(4), w) == w


def test_delta_and_varpi():
    assert delta(1, 2) == y((1, 1), (2, 1))
    assert varpi(y((1, 1), (3, -1), (2, -1), (3, 1), (2, 1), (3, 1)), 2) == AlphaWord.parse(
        "a1 a2^-1 a1 a2 a1^-1 a2"
    )
    assert varpi((), 2) == AlphaWord()
    for k in (1, 2, 3):
        for i in range(1, k + 1):
            assert varpi(delta(i, k), k) == AlphaWord()


def test_trefoil_relation_word():
    assert relation_words(TREFOIL)[0] == AlphaWord.parse("a1 a2^-1 a1 a2 a1^-1 a2")


def test_trivial_braid_relations_are_empty():
    assert relation_words(BraidWord(4)) == [AlphaWord(), AlphaWord()]


def _free_words(k):
    letter = st.tuples(st.integers(1, 2 * k), st.sampled_from((1, -1)))
    return st.lists(letter, max_size=6).map(tuple)


@given(_free_words(3), st.integers(1, 4), st.integers(1, 5))
def test_braid_relations(w, i, j):
    lhs = BraidWord(6, ((i, 1), (i + 1, 1), (i, 1)))
    rhs = BraidWord(6, ((i + 1, 1), (i, 1), (i + 1, 1)))
    assert push_down(lhs, w) == push_down(rhs, w)
    if abs(i - j) >= 2:
        assert push_down(BraidWord(6, ((i, 1), (j, 1))), w) == push_down(BraidWord(6, ((j, 1), (i, 1))), w)
    assert push_down(BraidWord(6, ((i, 1), (i, -1))), w) == free_reduce(w)


@given(_free_words(3), _free_words(3), st.lists(st.tuples(st.integers(1, 5), st.sampled_from((1, -1))), max_size=4))
def test_push_down_is_homomorphism(u, v, letters):
    b = BraidWord(6, tuple(letters))
    assert free_reduce(push_down(b, u + v)) == free_reduce(push_down(b, u) + push_down(b, v))


def test_components():
    assert plat_permutation_components(TREFOIL) == 1
    assert plat_permutation_components(parse_braid("s2 s2")) == 2
    assert plat_permutation_components(BraidWord(4)) == 2


def test_plat_moves():
    assert plat_move(TREFOIL, "P1") == BraidWord(4, ((1, 1),) + TREFOIL.letters)
    assert plat_move(TREFOIL, "P3", "right") == BraidWord(4, TREFOIL.letters + ((2, 1), (1, 1), (1, 1), (2, 1)))
    assert plat_move(TREFOIL, "P4") == BraidWord(6, ((4, 1),) + TREFOIL.letters)
    with pytest.raises(InapplicableMove):
        plat_move(TREFOIL, "P2", i=2)
    with pytest.raises(InapplicableMove):
        plat_move(TREFOIL, "P5")


def test_plat_reduce_undoes_random_moves():
    rng = random.Random(7)
    for _ in range(30):
        b = TREFOIL
        for _ in range(rng.randint(1, 3)):
            move = rng.choice(["P1", "P2", "P3"])
            b = plat_move(b, move, rng.choice(["left", "right"]))
        assert plat_reduce(b) == TREFOIL
    assert plat_reduce(plat_move(TREFOIL, "P4")) == TREFOIL
