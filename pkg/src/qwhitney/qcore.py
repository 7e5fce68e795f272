"""q-combinatorial primitives.

Symbolic building blocks ([n]_q, [n]_q!, Gaussian binomials, q-falling
factorials) return exact Laurent polynomials.  The symmetric-polynomial
evaluators are generic over any scalar supporting ring arithmetic, and the
q-exponential pair e_q / ehat_q works in floating point for 0 < q < 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

from .errors import DivergentSeriesError, DomainError, NonConvergenceError
from .laurent import ONE, ZERO, LaurentPoly

TERM_CAP = 10**6


@lru_cache(maxsize=None)
def q_integer(n: int) -> LaurentPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    if n == 0:
        return ZERO
    return LaurentPoly(0, (1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> LaurentPoly:
    """[n]_q! = [1]_q [2]_q ... [n]_q, with the empty product equal to 1."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_integer(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial coefficient; 0 outside 0 <= k <= n.

    Computed as [n]_q! / ([k]_q! [n-k]_q!) by exact division; an inexact
    quotient here would be an internal inconsistency, never a caller error.
    """
    if k < 0 or k > n:
        return ZERO
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


def q_falling_factorial(x: int, n: int) -> LaurentPoly:
    """[x]_q [x-1]_q ... [x-n+1]_q for integer x >= 0; zero factor kills it."""
    if x < 0 or n < 0:
        raise ValueError("q_falling_factorial needs x >= 0 and n >= 0")
    out = ONE
    for i in range(n):
        if x - i == 0:
            return ZERO
        out = out * q_integer(x - i)
    return out


def elementary_symmetric(weights: Sequence, k: int):
    """e_k over the weights: sum of products over strict index subsets.

    One pass per weight; e_0 is 1 even for an empty list, and k beyond the
    list length gives 0.  Works for any ring scalar.
    """
    if k < 0:
        raise ValueError("elementary_symmetric needs k >= 0")
    table = [1] + [0] * k
    for w in weights:
        for i in range(k, 0, -1):
            prev = table[i - 1]
            if prev:
                table[i] = table[i] + w * prev
    return table[k]


def complete_homogeneous(weights: Sequence, k: int):
    """h_k over the weights: sum of products over weak (multiset) selections."""
    if k < 0:
        raise ValueError("complete_homogeneous needs k >= 0")
    table = [1] + [0] * k
    for w in weights:
        for i in range(1, k + 1):
            prev = table[i - 1]
            if prev:
                table[i] = table[i] + w * prev
    return table[k]


def _float_q_int(n: int, q: float) -> float:
    return n * 1.0 if q == 1.0 else (1.0 - q**n) / (1.0 - q)


def _series(term_step: Callable[[int, float], float], tol: float, cap: int) -> float:
    total = 0.0
    term = 1.0
    k = 0
    while True:
        total += term
        k += 1
        if k > cap:
            raise NonConvergenceError(f"series did not settle within {cap} terms")
        term = term_step(k, term)
        if abs(term) < tol * abs(total):
            return total


def q_exp(t: float, q: float, tol: float = 1e-12, *, direct: bool = False,
          term_cap: int = TERM_CAP) -> float:
    """e_q(t) = sum_k t^k / [k]_q!, for 0 < q < 1.

    The series converges only for |t|(1-q) < 1.  Negative arguments are
    routed through 1 / ehat_q(-t) unless direct=True forces the raw
    (alternating, cancellation-prone) summation.
    """
    if not 0.0 < q < 1.0:
        raise DomainError(f"q must lie in (0, 1), got {q}")
    if tol <= 0:
        raise DomainError("tol must be positive")
    if t < 0 and not direct:
        return 1.0 / q_exp_hat(-t, q, tol, term_cap=term_cap)
    if abs(t) * (1.0 - q) >= 1.0:
        raise DivergentSeriesError(f"e_q series diverges: |t|(1-q) = {abs(t) * (1 - q)}")
    return _series(lambda k, term: term * t / _float_q_int(k, q), tol, term_cap)


def q_exp_hat(t: float, q: float, tol: float = 1e-12, *, direct: bool = False,
              term_cap: int = TERM_CAP) -> float:
    """ehat_q(t) = sum_k q^C(k,2) t^k / [k]_q!, for 0 < q < 1.

    Entire in t; for t >= 0 the direct series is used.  Negative arguments
    go through 1 / e_q(-t) (so e_q(x) ehat_q(-x) = 1 holds by construction),
    which requires (-t)(1-q) < 1; direct=True bypasses that for testing.
    """
    if not 0.0 < q < 1.0:
        raise DomainError(f"q must lie in (0, 1), got {q}")
    if tol <= 0:
        raise DomainError("tol must be positive")
    if t < 0 and not direct:
        return 1.0 / q_exp(-t, q, tol, term_cap=term_cap)
    # q^C(k,2) gains a factor q^(k-1) at step k.
    return _series(lambda k, term: term * t * q ** (k - 1) / _float_q_int(k, q),
                   tol, term_cap)
