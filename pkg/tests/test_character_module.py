import random

import pytest

from platskein.character_module import (
    RelationSet,
    generate_relations,
    normal_form,
    presented_braid,
    reduced_words,
    y_degree,
)
from platskein.braid_plat import parse_braid
from platskein.trace_ring import TracePoly

Y3 = "(2 + t^4 - 3*t^4*x^2 + t^4*x^4)*y + t^6 + t^10 - 3*t^6*x^2 + t^6*x^4"
HOPF_Y2 = "t^-8 + 2*t^-4 + 1 - t^-4*x1^2 - t^-4*x2^2 - t^-2*x1*x2*y"


def tp(text):
    return TracePoly.parse(text)


@pytest.fixture(scope="module")
def trefoil():
    return generate_relations("s2 s2 s2")


def test_trefoil_y3(trefoil):
    assert normal_form(tp("y^3"), trefoil) == tp(Y3)


def test_hopf_y2_keeps_loops_distinct():
    rs = generate_relations("s2 s2")
    assert not rs.knot and rs.variables() == ["x1", "x2", "y"]
    assert normal_form(tp("y^2"), rs) == tp(HOPF_Y2)


def test_y_free_polynomials_are_fixed(trefoil):
    p = tp("t^2*x^3 - x + 5")
    assert normal_form(p, trefoil) == p


def test_high_powers_reduce(trefoil):
    assert y_degree(normal_form(tp("y^7"), trefoil)) < 2


def _random_poly(rng):
    out = TracePoly.const(0)
    for _ in range(3):
        c, e = rng.randint(-2, 2), rng.randint(-4, 4)
        out = out + tp(f"{c}*t^{e}*x^{rng.randint(0, 2)}*y^{rng.randint(0, 3)}")
    return out


def test_normal_form_idempotent(trefoil):
    rng = random.Random(11)
    for _ in range(50):
        once = normal_form(_random_poly(rng), trefoil)
        assert normal_form(once, trefoil) == once


def test_y_cubed_agrees_with_reducing_y_squared_twice(trefoil):
    y = tp("y")
    assert normal_form(y * normal_form(y * y, trefoil), trefoil) == normal_form(y**3, trefoil)


def test_reduction_is_ring_quotient(trefoil):
    rng = random.Random(12)
    failures = 0
    for _ in range(100):
        p, q = _random_poly(rng), _random_poly(rng)
        if normal_form(p * q, trefoil) != normal_form(normal_form(p, trefoil) * normal_form(q, trefoil), trefoil):
            failures += 1
    assert failures == 0, f"{failures} of 100 products reduce inconsistently"


def test_reduced_words_are_reduced():
    for w in reduced_words(2, 3):
        assert w.reduced() == w


def test_presentations():
    b = parse_braid("s2 s2 s2")
    assert presented_braid(b, "plain") == b
    with pytest.raises(ValueError):
        presented_braid(b, "other")


def test_relation_set_json_round_trip(trefoil):
    assert RelationSet.from_json(trefoil.to_json()) == trefoil


def test_generation_is_deterministic():
    assert generate_relations("s2", 3) == generate_relations("s2", 3)
