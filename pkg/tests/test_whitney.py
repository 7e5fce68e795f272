from fractions import Fraction
from math import comb

import pytest

from qwhitney.errors import ZeroMError
from qwhitney.laurent import ONE, LaurentPoly, q_monomial
from qwhitney.modes import FloatQ, RationalQ
from qwhitney.whitney import (
    WhitneyParams,
    defining_relation_check,
    dowling_number,
    dowling_polynomial,
    dowling_sequence,
    q_stirling_first,
    q_stirling_first_complement,
    q_stirling_second,
    whitney_first_elementary,
    whitney_first_triangle,
    whitney_second_alternating,
    whitney_second_compositions,
    whitney_second_multisets,
    whitney_second_triangle,
)

M, R = Fraction(7, 3), Fraction(2)
PARAMS = WhitneyParams(M, R)
GRID = [(Fraction(1), Fraction(0)), (Fraction(2), Fraction(1)),
        (Fraction(3, 2), Fraction(5, 2))]


def test_params_validation():
    with pytest.raises(TypeError):
        WhitneyParams(1.5, 0)  # float m needs float mode
    with pytest.raises(ValueError):
        RationalQ(Fraction(0))
    p = WhitneyParams(1.5, 0.25, FloatQ(0.5))
    assert p.m == Fraction(3, 2) and p.r == Fraction(1, 4)


def test_first_kind_small_entries():
    tri = whitney_first_triangle(PARAMS, 3)
    assert tri.value(0, 0) == ONE
    assert tri.value(1, 0) == -R
    assert tri.value(3, 3) == q_monomial(-3)
    assert tri.value(2, 1) == q_monomial(-1, -(M + 2 * R))
    assert tri.value(5, 2) == 0  # outside the built range
    assert tri.value(2, 3) == 0 and tri.value(2, -1) == 0


def test_second_kind_small_entries():
    tri = whitney_second_triangle(PARAMS, 3)
    assert tri.value(3, 0) == R**3
    assert tri.value(2, 2) == q_monomial(1)
    assert tri.value(3, 1) == M**2 + 3 * M * R + 3 * R**2


def test_first_boundaries():
    tri = whitney_first_triangle(PARAMS, 6)
    for n in range(7):
        assert tri.value(n, n) == q_monomial(-comb(n, 2))
        prod = ONE
        for i in range(n):
            prod = prod * PARAMS.weight(i)
        expect = q_monomial(-comb(n, 2)) * prod
        assert tri.value(n, 0) == (expect if n % 2 == 0 else -expect)


def test_algorithm_agreement_small():
    for m, r in GRID:
        p = WhitneyParams(m, r)
        w = whitney_first_triangle(p, 7)
        W = whitney_second_triangle(p, 7)
        for n in range(8):
            for k in range(n + 1):
                assert whitney_first_elementary(p, n, k) == w.value(n, k)
                assert whitney_second_compositions(p, n, k) == W.value(n, k)
                assert whitney_second_multisets(p, n, k) == W.value(n, k)
                assert whitney_second_alternating(p, n, k) == W.value(n, k)


def test_elementary_form_examples():
    p = PARAMS
    assert whitney_first_elementary(p, 4, 4) == q_monomial(-comb(4, 2))
    assert whitney_first_elementary(p, 2, 0) == q_monomial(-1) * R * (M + R)
    assert whitney_first_elementary(p, 2, 1) == q_monomial(-1, -(M + 2 * R))


def test_composition_form_examples():
    p = PARAMS
    assert whitney_second_compositions(p, 3, 3) == q_monomial(comb(3, 2))
    assert whitney_second_compositions(p, 2, 1) == M + 2 * R
    assert whitney_second_compositions(p, 2, 0) == R**2


def test_multiset_form_examples():
    p = PARAMS
    assert whitney_second_multisets(p, 4, 4) == q_monomial(comb(4, 2))
    assert whitney_second_multisets(p, 2, 0) == R**2
    assert whitney_second_multisets(p, 3, 1) == M**2 + 3 * M * R + 3 * R**2


def test_alternating_form_requires_nonzero_m():
    p = WhitneyParams(Fraction(0), Fraction(2))
    with pytest.raises(ZeroMError):
        whitney_second_alternating(p, 2, 1)
    # the other algorithms are fine at m = 0
    assert whitney_second_multisets(p, 2, 1) == 2 * Fraction(2)


def test_rational_mode_matches_symbolic_evaluation():
    q0 = Fraction(3, 5)
    sym = WhitneyParams(M, R)
    rat = WhitneyParams(M, R, RationalQ(q0))
    ws = whitney_first_triangle(sym, 6)
    wr = whitney_first_triangle(rat, 6)
    for n in range(7):
        for k in range(n + 1):
            assert ws.value(n, k).evaluate(q0) == wr.value(n, k)


def test_float_mode_runs():
    p = WhitneyParams(2, 1, FloatQ(0.5))
    tri = whitney_second_triangle(p, 4)
    sym = whitney_second_triangle(WhitneyParams(2, 1), 4)
    for n in range(5):
        for k in range(n + 1):
            assert tri.value(n, k) == pytest.approx(sym.value(n, k).evaluate(0.5))


def test_shifted_family_matches_reparameterization():
    # shift s is the same family as (m q^s, m [s]_q + r); at rational q that
    # reparameterization can be built directly.
    q0 = Fraction(2, 7)
    mode = RationalQ(q0)
    base = WhitneyParams(M, R, mode)
    s = 3
    mbar = M * q0**s
    rbar = M * sum(q0**i for i in range(s)) + R
    direct = whitney_first_triangle(WhitneyParams(mbar, rbar, mode), 5)
    shifted = whitney_first_triangle(base, 5, shift=s)
    for n in range(6):
        for k in range(n + 1):
            assert direct.value(n, k) == shifted.value(n, k)


def classical_stirling_second(n, k):
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return classical_stirling_second(n - 1, k - 1) + k * classical_stirling_second(n - 1, k)


def classical_stirling_first_unsigned(n, k):
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return (classical_stirling_first_unsigned(n - 1, k - 1)
            + (n - 1) * classical_stirling_first_unsigned(n - 1, k))


def test_q_stirling_classical_limits():
    assert q_stirling_first(4, 2).evaluate(1) == 11
    assert q_stirling_second(4, 2).evaluate(1) == 7
    for n in range(7):
        for k in range(n + 1):
            assert q_stirling_first(n, k).evaluate(1) == classical_stirling_first_unsigned(n, k)
            assert q_stirling_second(n, k).evaluate(1) == classical_stirling_second(n, k)


def test_q_stirling_second_diagonal():
    for n in range(6):
        assert q_stirling_second(n, n) == q_monomial(comb(n, 2))


def test_q_stirling_first_complement_form_agrees():
    for n in range(1, 8):
        for k in range(1, n + 1):
            assert q_stirling_first_complement(n, k) == q_stirling_first(n, k), (n, k)


def test_q_stirling_first_unsigned_has_nonnegative_coefficients():
    for n in range(7):
        for k in range(n + 1):
            value = q_stirling_first(n, k)
            if isinstance(value, LaurentPoly):
                assert all(c >= 0 for _, c in value.terms())


def test_first_kind_sign_support():
    # (-1)^(n-k) q^C(n,2) w(n,k) is a weight sum, so nonnegative for m, r >= 0.
    for m, r in GRID:
        p = WhitneyParams(m, r)
        tri = whitney_first_triangle(p, 8)
        for n in range(9):
            for k in range(n + 1):
                v = q_monomial(comb(n, 2)) * tri.value(n, k)
                if (n - k) % 2:
                    v = -v
                assert all(c >= 0 for _, c in v.terms())


def test_dowling_values():
    p = PARAMS
    assert dowling_number(p, 0) == 1
    assert dowling_number(p, 2) == R**2 + M + 2 * R + q_monomial(1)
    for n in range(6):
        assert dowling_polynomial(p, n, 0) == R**n
        assert dowling_polynomial(p, n, 1) == dowling_number(p, n)
    assert dowling_sequence(p, 5)[3] == dowling_number(p, 3)


def test_defining_relation_examples():
    p = WhitneyParams(Fraction(2), Fraction(1))
    for rep in defining_relation_check(p, 0, 3):
        assert rep.passed
    for rep in defining_relation_check(p, 3, 0):
        assert rep.passed and rep.lhs == rep.rhs == 1
    first, second = defining_relation_check(p, 3, 2)
    assert first.passed and second.passed
    assert first.identity == "defining_first"
    assert second.identity == "defining_second"
    # ell = 0 forces the first-kind LHS to zero
    first0, _ = defining_relation_check(p, 0, 4)
    assert first0.lhs == 0 and first0.rhs == 0


def test_orthogonality_small():
    for m, r in GRID:
        p = WhitneyParams(m, r)
        w = whitney_first_triangle(p, 6)
        W = whitney_second_triangle(p, 6)
        for n in range(7):
            for j in range(n + 1):
                acc = 0
                for k in range(j, n + 1):
                    acc = acc + w.value(n, k) * W.value(k, j)
                assert acc == (1 if n == j else 0), (m, r, n, j)
