from fractions import Fraction

import pytest
from hypothesis import given

from platskein.coefficients import ONE, DivisionByZero, LaurentPoly, RationalFunction, rf_arith

from strategies import laurent, nonzero_rational, rational


@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(rational, rational, rational)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


@given(nonzero_rational)
def test_self_division_is_one(x):
    assert rf_arith(x, x, "div") == ONE


@given(rational)
def test_canonicalize_idempotent(x):
    once = x.canonicalize()
    assert once.canonicalize() == once
    assert str(once) == str(x)


@given(rational)
def test_text_round_trip(x):
    assert RationalFunction.parse(str(x)) == x


@given(laurent)
def test_laurent_text_round_trip(p):
    assert LaurentPoly.parse(str(p)) == p


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / RationalFunction()


def test_quantum_integer_is_laurent():
    t = LaurentPoly.monomial(1)
    q = RationalFunction(t**6 - t**-6, t**2 - t**-2)
    assert q.is_laurent()
    assert str(q) == "t^-4 + 1 + t^4"


def test_evaluation_at_rational_point():
    p = LaurentPoly({2: 1, -2: 1})
    assert p.evaluate(Fraction(2)) == Fraction(17, 4)
