import pytest

from platskein.character_module import normal_form
from platskein.coefficients import LaurentPoly, RationalFunction
from platskein.peripheral import (
    AqPolynomial,
    DegenerateElimination,
    Elimination,
    MissingSequenceValue,
    SingularLeadingCoefficient,
    UnsupportedFamily,
    aq_polynomial,
    colored_jones_from_recurrence,
    counit_sequence,
    eliminate_y,
    eval_counit,
    knot_relations,
    longitude_seeds,
    mu_counit,
    recurse,
    recurse_lambda,
    to_aq,
)
from platskein.quantum_torus import LAMBDA, MU, QTorusElement, boundary_generators, qt_mult
from platskein.trace_ring import TracePoly

from test_bracket_oracle import TREFOIL_JONES

TREFOIL = "s2 s2 s2"
AQ_TREFOIL = "l * (m^-1 - t^12*m^-5) + (t^4*m^5 - t^8*m - t^8*m^-1 + t^4*m^-5) + l^-1 * (-t^12*m^5 + m)"
SEED_L = "-t^2 - t^6 + 6*t^6*x^2 - 5*t^6*x^4 + t^6*x^6 + (-1 + t^4 - 3*t^4*x^2 + t^4*x^4)*y"
SEED_LP = "-t^6*x*(3*t^2 - 4*t^2*x^2 + t^2*x^4) - t^6*x*(-2 + x^2)*y"
SEED_LAM = (
    "-t^-2*(t^2 - t^10 + 6*t^10*x^2 - 5*t^10*x^4 + t^10*x^6) - t^-2*(1 + t^8 - 3*t^8*x^2 + t^8*x^4)*y"
)
ELIMINATION = Elimination(
    TracePoly.parse("t^16*x^3 - 2*t^16*x"),
    TracePoly.parse("t^12*x^4 - 3*t^12*x^2 + t^12 - 1"),
    TracePoly.parse("t^12*x - t^8*x^5 + 5*t^8*x^3 - 5*t^8*x"),
)


def tp(text):
    return TracePoly.parse(text)


@pytest.fixture(scope="module")
def seeds():
    return longitude_seeds(TREFOIL)


@pytest.fixture(scope="module")
def jones():
    return [RationalFunction.from_lp(LaurentPoly.parse(TREFOIL_JONES[n])) for n in range(4)]


def test_trefoil_seeds(seeds):
    rs = seeds.rs
    assert seeds.L == normal_form(tp(SEED_L), rs)
    assert seeds.Lp == normal_form(tp(SEED_LP), rs)
    assert seeds.Lam == normal_form(tp(SEED_LAM), rs)


def test_recurse_zero_and_one(seeds):
    rs = seeds.rs
    assert recurse(seeds.L, seeds.Lp, rs, 0).L == seeds.L
    d = RationalFunction.t_power(2) - RationalFunction.t_power(-2)
    expected = normal_form((tp("x") * seeds.L).scale(RationalFunction.t_power(2)) + seeds.Lp.scale(d / RationalFunction.t_power(2)), rs)
    assert recurse(seeds.L, seeds.Lp, rs, 1).L == expected


def test_lambda_recursion_methods_agree(seeds):
    for n in range(4):
        a = recurse_lambda(seeds.Lam, seeds.Lamp, seeds.rs, n, "sequential")
        b = recurse_lambda(seeds.Lam, seeds.Lamp, seeds.rs, n, "simultaneous")
        assert a == b


def test_elimination_up_to_unit(seeds):
    e = eliminate_y(seeds.L, seeds.Lp, seeds.rs)
    assert e.normalized() == ELIMINATION.normalized()
    assert e.annihilates(seeds.L, seeds.Lp, seeds.rs)
    assert ELIMINATION.annihilates(seeds.L, seeds.Lp, seeds.rs)


def test_degenerate_inputs():
    rs = knot_relations(TREFOIL)
    assert eliminate_y(tp("x^2"), tp("t^2*x*y"), rs) == Elimination(tp("1"), tp("0"), tp("-x^2"))
    assert eliminate_y(tp("y"), tp("x"), rs) == Elimination(tp("0"), tp("1"), tp("-x"))
    with pytest.raises(DegenerateElimination):
        eliminate_y(tp("y"), tp("x*y"), rs, max_degree=0)


def test_trefoil_aq_text():
    assert aq_polynomial(TREFOIL).to_text() == AQ_TREFOIL


def test_aq_invariant_under_presentation_of_input(seeds):
    assert to_aq(eliminate_y(seeds.L, seeds.Lp, seeds.rs)) == to_aq(ELIMINATION)


def test_unknot_aq():
    x_l, _, _ = boundary_generators()
    loop = QTorusElement.scalar(LaurentPoly({2: 1, -2: 1}))
    assert aq_polynomial("s2") == AqPolynomial.normalize(x_l + loop)


def test_links_are_unsupported():
    with pytest.raises(UnsupportedFamily):
        longitude_seeds("s2 s2")
    with pytest.raises(UnsupportedFamily):
        aq_polynomial("s2 s2 s2 s2 s2")


def test_json_round_trips(seeds):
    aq = aq_polynomial(TREFOIL)
    assert AqPolynomial.from_json(aq.to_json()) == aq
    assert Elimination.from_json(ELIMINATION.to_json()) == ELIMINATION


def test_counit_examples(jones):
    f = counit_sequence(jones)
    assert eval_counit(MU, f) == RationalFunction.t_power(2)
    assert eval_counit(LAMBDA**-1, f).is_zero()
    for n in range(1, 6):
        u = sum((LAMBDA ** (n - 2 * i) for i in range(1, n + 1)), QTorusElement())
        assert eval_counit(u, f).is_zero()


def test_counit_needs_values(jones):
    f = counit_sequence(jones)
    with pytest.raises(MissingSequenceValue):
        eval_counit(LAMBDA**9, f)


def test_recurrence_annihilation(jones):
    aq = aq_polynomial(TREFOIL)
    extended = [colored_jones_from_recurrence(aq, jones[:2], n) for n in range(6)]
    assert extended[:4] == jones
    f = counit_sequence(extended)
    for n in range(4):
        assert eval_counit(qt_mult(LAMBDA**n, aq.element), f).is_zero()


def test_recurrence_zero_is_one(jones):
    assert colored_jones_from_recurrence(aq_polynomial(TREFOIL), jones[:2], 0) == RationalFunction.from_lp(
        LaurentPoly.const(1)
    )


def test_singular_leading_coefficient():
    aq = qt_mult(MU - QTorusElement.scalar(RationalFunction.t_power(2)), LAMBDA) + QTorusElement.scalar(1)
    with pytest.raises(SingularLeadingCoefficient):
        colored_jones_from_recurrence(aq, [1], 3)


def test_mu_counit_collects_lambda_powers():
    u = qt_mult(MU, LAMBDA) + LAMBDA.scale(3)
    assert mu_counit(u) == {1: RationalFunction.t_power(2) + 3}


def test_hole_consistency(jones):
    # eps(x_l u) = eps(-t^3 x_lm u) for u in 1, lambda, lambda^2
    f = counit_sequence(jones)
    x_l, _, x_lm = boundary_generators()
    twist = RationalFunction.t_power(3, -1)
    for n in range(3):
        u = LAMBDA**n
        assert eval_counit(qt_mult(x_l, u), f) == eval_counit(qt_mult(x_lm.scale(twist), u), f), n


def test_unknot_lambda_mu_counit_kernel():
    # for the unknot the counit kills lambda^n (x_lm + t^-3 x_m), not lambda^n (x_lm + t^3 x_m)
    _, x_m, x_lm = boundary_generators()
    f = counit_sequence([RationalFunction.from_lp(LaurentPoly.parse(s)) for s in ("1", "-t^-2 - t^2", "t^-4 + 1 + t^4")])
    for n in range(2):
        killed = qt_mult(LAMBDA**n, x_lm + x_m.scale(RationalFunction.t_power(-3)))
        kept = qt_mult(LAMBDA**n, x_lm + x_m.scale(RationalFunction.t_power(3)))
        assert eval_counit(killed, f).is_zero()
        assert not eval_counit(kept, f).is_zero()
