from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qwhitney.errors import EvalAtZeroError, InexactDivisionError
from qwhitney.laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    as_laurent,
    exact_div,
    laurent_eval,
    parse_laurent,
    q_monomial,
)

Q = q_monomial(1)


def test_q_monomial_basics():
    assert q_monomial(0) == 1
    assert q_monomial(-1) == LaurentPoly(-1, (1,))
    assert q_monomial(3) * q_monomial(-3) == 1


def test_zero_normalization():
    assert LaurentPoly(5, (0, 0)) == ZERO
    assert LaurentPoly(2, ()) == ZERO
    assert not ZERO
    assert LaurentPoly.from_terms({3: 0, -1: 0}) == ZERO
    assert ZERO.degree == -1 and ZERO.valuation == 0


def test_coefficients_normalize_to_int():
    p = LaurentPoly(0, (Fraction(4, 2),))
    assert p.coeffs == (2,)
    assert type(p.coeffs[0]) is int


def test_addition_and_subtraction():
    p = Q + 1
    assert p == LaurentPoly(0, (1, 1))
    assert p - Q == ONE
    assert 1 - Q == LaurentPoly(0, (1, -1))
    assert (p + (-p)) == ZERO


def test_exact_div_examples():
    assert exact_div(Q * Q - 1, Q - 1) == Q + 1
    assert (Q + 1) / Q == 1 + q_monomial(-1)
    with pytest.raises(InexactDivisionError):
        exact_div(Q + 1, Q - 1)
    with pytest.raises(ZeroDivisionError):
        exact_div(Q, ZERO)


def test_division_by_rational():
    assert (Q * 3) / 3 == Q
    assert (Q + 1) / Fraction(1, 2) == 2 * Q + 2


def test_pow():
    assert (Q + 1) ** 0 == ONE
    assert (Q + 1) ** 2 == Q * Q + 2 * Q + 1
    assert q_monomial(2, 3) ** -1 == q_monomial(-2, Fraction(1, 3))
    with pytest.raises(InexactDivisionError):
        (Q + 1) ** -1


def test_evaluate_examples():
    p = LaurentPoly(0, (1, 1, 1))
    assert laurent_eval(p, 1) == 3
    assert q_monomial(-1).evaluate(Fraction(1, 2)) == 2
    with pytest.raises(EvalAtZeroError):
        q_monomial(-1).evaluate(0)
    assert (Q + 2).evaluate(0) == 2
    assert ZERO.evaluate(Fraction(7)) == 0


def test_evaluate_float():
    p = 2 * Q + q_monomial(-1)
    assert p.evaluate(0.5) == pytest.approx(3.0)


def test_float_mixing_is_an_error():
    with pytest.raises(TypeError):
        Q + 0.5
    with pytest.raises(TypeError):
        0.5 * Q
    with pytest.raises(TypeError):
        as_laurent(0.5)


def test_canonical_rendering():
    p = q_monomial(-1, -1) + 2 + q_monomial(2, Fraction(1, 3))
    assert str(p) == "-1*q^-1 + 2 + 1/3*q^2"
    assert str(ZERO) == "0"
    assert str(Q) == "1*q^1"
    assert parse_laurent(str(p)) == p
    assert parse_laurent("0") == ZERO


def test_hash_consistent_with_int_equality():
    assert hash(LaurentPoly.constant(2)) == hash(2)
    assert LaurentPoly.constant(2) == 2
    assert len({LaurentPoly.constant(2), 2}) == 1


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)
polys = st.dictionaries(st.integers(min_value=-5, max_value=5), rationals,
                        max_size=5).map(LaurentPoly.from_terms)


@settings(max_examples=150)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=150)
@given(polys, polys.filter(bool))
def test_exact_div_round_trip(a, b):
    assert exact_div(a * b, b) == a


@settings(max_examples=100)
@given(polys, polys, st.sampled_from([Fraction(1), Fraction(1, 2), Fraction(-2, 3)]))
def test_evaluate_is_a_ring_homomorphism(a, b, q0):
    assert (a * b).evaluate(q0) == a.evaluate(q0) * b.evaluate(q0)
    assert (a + b).evaluate(q0) == a.evaluate(q0) + b.evaluate(q0)


@settings(max_examples=150)
@given(polys)
def test_canonical_text_round_trip(p):
    assert parse_laurent(str(p)) == p


def test_doctests_pass():
    import doctest

    import qwhitney.laurent as mod

    assert doctest.testmod(mod).failed == 0
