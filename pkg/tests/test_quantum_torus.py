import pytest
from hypothesis import given

from platskein.coefficients import RationalFunction
from platskein.quantum_torus import (
    LAMBDA,
    MU,
    QTorusElement,
    boundary_generators,
    chebyshev,
    evaluate_polynomial,
    qt_mult,
    theta,
)

from strategies import qtorus


def test_commutation_relation():
    assert qt_mult(LAMBDA, MU) == qt_mult(MU, LAMBDA).scale(RationalFunction.t_power(2))


@given(qtorus, qtorus, qtorus)
def test_associative_and_distributive(u, v, w):
    assert qt_mult(qt_mult(u, v), w) == qt_mult(u, qt_mult(v, w))
    assert qt_mult(u, v + w) == qt_mult(u, v) + qt_mult(u, w)


@given(qtorus, qtorus)
def test_theta_is_involutive_algebra_map(u, v):
    assert theta(theta(u)) == u
    assert theta(qt_mult(u, v)) == qt_mult(theta(u), theta(v))


def test_inverse_monomials():
    m = qt_mult(MU, LAMBDA).scale(3)
    assert qt_mult(m, m**-1) == QTorusElement.scalar(1)
    with pytest.raises(ValueError):
        (LAMBDA + MU) ** -1


def test_boundary_generators_theta_invariant():
    for g in boundary_generators():
        assert theta(g) == g


def test_chebyshev_coefficients():
    assert chebyshev(0) == [1]
    assert chebyshev(2) == [-1, 0, 1]
    assert chebyshev(3) == [0, -2, 0, 1]


@pytest.mark.parametrize("n", range(0, 9))
def test_chebyshev_of_loop(n):
    # T_n(lambda + lambda^-1) = lambda^n + lambda^(n-2) + ... + lambda^-n
    x = LAMBDA + LAMBDA**-1
    expected = sum((LAMBDA ** (n - 2 * i) for i in range(n + 1)), QTorusElement())
    assert evaluate_polynomial(chebyshev(n), x) == expected


@given(qtorus)
def test_text_and_json_round_trip(u):
    assert QTorusElement.parse(u.to_text()) == u
    assert QTorusElement.from_json(u.to_json()) == u
