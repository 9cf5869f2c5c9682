import random

import pytest

from platskein.braid_plat import BraidWord, parse_braid
from platskein.bracket_oracle import (
    TooLarge,
    colored_jones_oracle,
    diagram_from_plat,
    kauffman_bracket,
    normalized_bracket,
    parallel_value,
    state_sum,
    sweep,
    zero_framed_cable,
)
from platskein.coefficients import LaurentPoly

LOOP = LaurentPoly({2: -1, -2: -1})

# hand-computed reference values, frozen
TREFOIL_JONES = {
    0: "1",
    1: "-t^2 - t^6 - t^10 + t^18",
    2: "t^4 + t^8 + t^12 + t^16 + t^20 - t^32 - t^36 - t^40 + t^48",
    3: "-t^6 - t^10 - t^14 - t^18 - t^22 - t^26 - t^30 + t^46 + t^50 + t^54 + t^58 + t^62 - t^74 - t^78 - t^82 + t^90",
}


def quantum_integer(n):
    t = LaurentPoly.monomial(1)
    num = t ** (2 * n) - t ** (-2 * n)
    return num.exact_div(t**2 - t**-2)


def test_hopf_bracket():
    d = diagram_from_plat("s2 s2")
    assert kauffman_bracket(d) == LaurentPoly.parse("t^-6 + t^-2 + t^2 + t^6")
    assert d.writhe == 2


@pytest.mark.parametrize("braid", ["s2", "s2 s2", "s2 s2 s2", "s1 s2^-1 s3 s2", "s2 s2 s2 s2 s2"])
def test_state_sum_agrees_with_sweep(braid):
    d = diagram_from_plat(braid)
    assert state_sum(d) == sweep(d)


def test_cable_dual_route():
    d = zero_framed_cable("s2 s2 s2", 2)
    assert state_sum(d) == sweep(d)


def test_state_sum_budget():
    with pytest.raises(TooLarge):
        state_sum(diagram_from_plat(BraidWord(4, ((2, 1),) * 25)))


def _random_braid(rng, n):
    return [(rng.randint(1, 3), rng.choice((1, -1))) for _ in range(n)]


def test_reidemeister_two_and_three():
    rng = random.Random(3)
    for _ in range(20):
        pre, post = _random_braid(rng, rng.randint(0, 3)), _random_braid(rng, rng.randint(0, 3))
        base = kauffman_bracket(diagram_from_plat(BraidWord(4, tuple(pre + post))))
        i, s = rng.randint(1, 3), rng.choice((1, -1))
        assert kauffman_bracket(diagram_from_plat(BraidWord(4, tuple(pre + [(i, s), (i, -s)] + post)))) == base
        left = BraidWord(4, tuple(pre + [(1, s), (2, s), (1, s)] + post))
        right = BraidWord(4, tuple(pre + [(2, s), (1, s), (2, s)] + post))
        assert kauffman_bracket(diagram_from_plat(left)) == kauffman_bracket(diagram_from_plat(right))


def test_kinks_leave_normalized_bracket_unchanged():
    # a letter s1 or s3 next to a cap twists the cap: one R-I kink
    rng = random.Random(4)
    base = parse_braid("s2 s2 s2")
    reference = normalized_bracket(diagram_from_plat(base))
    for _ in range(50):
        kink = (rng.choice((1, 3)), rng.choice((1, -1)))
        letters = (kink,) + base.letters if rng.random() < 0.5 else base.letters + (kink,)
        base = BraidWord(4, letters)
        assert normalized_bracket(diagram_from_plat(base), "sweep") == reference


@pytest.mark.parametrize("j", range(0, 4))
def test_unknot_cables(j):
    # the 0-framed j-cable of the unknot is j disjoint circles
    expected = LOOP**j if j else LaurentPoly.const(1)
    assert parallel_value(BraidWord(2), j, strands=2) == expected


@pytest.mark.parametrize("n", range(0, 4))
def test_unknot_colored_jones(n):
    assert colored_jones_oracle("s2", n) == quantum_integer(n + 1) * (-1) ** n


@pytest.mark.parametrize("n", range(0, 4))
def test_trefoil_colored_jones(n):
    assert colored_jones_oracle("s2 s2 s2", n) == LaurentPoly.parse(TREFOIL_JONES[n])


def test_oracle_independent_of_evaluator():
    assert colored_jones_oracle("s2 s2 s2", 2, "state_sum") == colored_jones_oracle("s2 s2 s2", 2, "sweep")


def test_sign_convention():
    assert colored_jones_oracle("s2 s2 s2", 1, sign_convention=-1) == -LaurentPoly.parse(TREFOIL_JONES[1])
