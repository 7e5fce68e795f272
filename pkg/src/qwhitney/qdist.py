"""Heine and Euler discrete q-distributions.

PMFs (for 0 < q < 1, lambda > 0):

    heine:  f(y) ~ q^C(y,2) lambda^y / [y]_q!      normalizer 1/ehat_q(lambda)
    euler:  f(z) ~ lambda^z / [z]_q!               normalizer 1/e_q(lambda)

The Euler family needs lambda (1-q) < 1 or the normalizing series diverges.
Normalizers always go through the reciprocal identity e_q(x) ehat_q(-x) = 1,
never through an alternating series.

Moments connect back to the exact triangles: E[(m[X]_q + r)^n] expands over
the second-kind Whitney numbers with the closed-form q-factorial moments, the
Whitney values coming from the exact symbolic triangle evaluated at the float
q only in the last step.  A direct series summation over the PMF serves as
the independent oracle for every moment formula.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterator

from .errors import DomainError, NonConvergenceError
from .modes import SYMBOLIC
from .qcore import q_exp, q_exp_hat
from .whitney import WhitneyParams, whitney_second_triangle

FAMILIES = ("heine", "euler")


@dataclass(frozen=True)
class QDistSpec:
    """Distribution family plus its parameters and series tolerances."""

    family: str
    q: float
    lam: float
    tol: float = 1e-12
    term_cap: int = 10**6

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if not 0.0 < self.q < 1.0:
            raise DomainError(f"q must lie in (0, 1), got {self.q}")
        if not self.lam > 0.0:
            raise DomainError(f"lambda must be positive, got {self.lam}")
        if self.tol <= 0.0:
            raise DomainError("tol must be positive")
        if self.term_cap < 1:
            raise DomainError("term_cap must be >= 1")
        if self.family == "euler" and self.lam * (1.0 - self.q) >= 1.0:
            raise DomainError(
                f"euler needs lambda (1-q) < 1, got {self.lam * (1.0 - self.q)}")

    @property
    def q_mean(self) -> float:
        """First q-factorial moment E[[X]_q]: lambda/(1 + lambda(1-q)) for
        heine, lambda for euler.

        This is the distribution's location parameter in the q sense; the
        arithmetic mean E[X] is a different (larger) quantity.
        """
        if self.family == "heine":
            return self.lam / (1.0 + self.lam * (1.0 - self.q))
        return self.lam


def _qint(n: int, q: float) -> float:
    return (1.0 - q**n) / (1.0 - q)


def _normalizer(spec: QDistSpec) -> float:
    if spec.family == "heine":
        return 1.0 / q_exp_hat(spec.lam, spec.q, spec.tol, term_cap=spec.term_cap)
    return 1.0 / q_exp(spec.lam, spec.q, spec.tol, term_cap=spec.term_cap)


def _pmf_stream(spec: QDistSpec) -> Iterator[float]:
    """pmf(0), pmf(1), ... computed incrementally."""
    value = _normalizer(spec)
    x = 0
    while True:
        yield value
        x += 1
        step = spec.lam / _qint(x, spec.q)
        if spec.family == "heine":
            step *= spec.q ** (x - 1)
        value *= step


def pmf(spec: QDistSpec, x: int) -> float:
    """Probability of the outcome x."""
    if x < 0 or x != int(x):
        raise DomainError("outcomes are nonnegative integers")
    stream = _pmf_stream(spec)
    value = next(stream)
    for _ in range(int(x)):
        value = next(stream)
    return value


def q_factorial_moment(spec: QDistSpec, order: int) -> float:
    """E[[X]_q [X-1]_q ... [X-order+1]_q] in closed form.

    heine: q^C(order,2) lambda^order / prod_{i=1..order} (1 + lambda(1-q) q^(i-1))
    euler: lambda^order
    """
    if order < 0:
        raise DomainError("order must be >= 0")
    if spec.family == "euler":
        return spec.lam**order
    den = 1.0
    for i in range(1, order + 1):
        den *= 1.0 + spec.lam * (1.0 - spec.q) * spec.q ** (i - 1)
    return spec.q ** comb(order, 2) * spec.lam**order / den


def whitney_moment(spec: QDistSpec, m: float, r: float, n: int) -> float:
    """E[(m [X]_q + r)^n] via the second-kind expansion.

    Expands over m^k W(n,k) E[[X]_q ... [X-k+1]_q], with the W values taken
    from the exact symbolic triangle and evaluated at the float q last.
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    params = WhitneyParams(Fraction(m), Fraction(r), SYMBOLIC)
    tri = whitney_second_triangle(params, n)
    total = 0.0
    for k in range(n + 1):
        wv = tri.value(n, k).evaluate(spec.q)
        total += float(m) ** k * wv * q_factorial_moment(spec, k)
    return total


def direct_moment_oracle(spec: QDistSpec, g: Callable[[int], float],
                         tol: float | None = None) -> float:
    """Reference sum_x pmf(x) g(x).

    Stops once pmf(x) |g(x)| < tol |partial| for 10 consecutive outcomes;
    raises NonConvergenceError at the term cap.
    """
    tol = spec.tol if tol is None else tol
    total = 0.0
    quiet = 0
    stream = _pmf_stream(spec)
    for x in range(spec.term_cap):
        contribution = next(stream) * g(x)
        total += contribution
        if abs(contribution) < tol * max(abs(total), 1e-300):
            quiet += 1
            if quiet >= 10:
                return total
        else:
            quiet = 0
    raise NonConvergenceError(f"moment series did not settle within {spec.term_cap} terms")


def series_moment(spec: QDistSpec, m: float, r: float, n: int,
                  upper: str = "extended") -> float:
    """E[(m[X]_q + r)^n] by series summation, with two limit conventions.

    upper="extended" is the convergent form: for euler,
    ehat_q(-lambda) sum_l lambda^l/[l]_q! (m[l]_q+r)^n taken to the
    truncation tolerance; for heine, the exact finite double sum over
    0 <= l <= n, 0 <= i <= n-l with summand
    (-1)^i q^(C(l,2)+2C(i,2)+l*i) lambda^(l+i) (m[l]_q+r)^n
    / ([l]_q! [i]_q! prod_{j<=l+i}(1+lambda(1-q)q^(j-1))),
    which regroups the factorial-moment expansion term by term.

    upper="truncated" instead cuts every limit at n (and flips the heine
    exponent to q^(-C(l,2)-l*i)); that variant does NOT equal the moment
    and exists so the discrepancy can be measured and reported.
    """
    if upper not in ("truncated", "extended"):
        raise ValueError("upper must be 'truncated' or 'extended'")
    if n < 0:
        raise DomainError("n must be >= 0")
    q, lam = spec.q, spec.lam

    if spec.family == "euler":
        norm = q_exp_hat(-lam, q, spec.tol, term_cap=spec.term_cap)
        total = 0.0
        fact = 1.0
        quiet = 0
        ell = 0
        while True:
            term = lam**ell / fact * (m * _qint(ell, q) + r) ** n
            total += term
            if upper == "truncated":
                if ell == n:
                    return norm * total
            else:
                if abs(term) < spec.tol * max(abs(total), 1e-300):
                    quiet += 1
                    if quiet >= 10:
                        return norm * total
                else:
                    quiet = 0
                if ell >= spec.term_cap:
                    raise NonConvergenceError("euler moment series did not settle")
            ell += 1
            fact *= _qint(ell, q)

    def qfact(k: int) -> float:
        out = 1.0
        for i in range(1, k + 1):
            out *= _qint(i, q)
        return out

    total = 0.0
    for ell in range(n + 1):
        inner_cap = n if upper == "truncated" else n - ell
        for i in range(inner_cap + 1):
            if upper == "truncated":
                factor = (-lam) ** i * q ** (-comb(ell, 2) - ell * i)
            else:
                sign = -1.0 if i % 2 else 1.0
                factor = sign * lam**i * q ** (comb(ell, 2) + 2 * comb(i, 2) + ell * i)
            den = qfact(ell) * qfact(i)
            prod = 1.0
            for j in range(1, ell + i + 1):
                prod *= 1.0 + lam * (1.0 - q) * q ** (j - 1)
            total += factor * lam**ell / den * (m * _qint(ell, q) + r) ** n / prod
    return total


def sample(spec: QDistSpec, count: int, seed: int) -> list[int]:
    """Inverse-CDF draws, deterministic for a fixed seed.

    The cumulative table is cut off once it reaches 1 - 1e-12; draws past
    the cutoff clamp to the last tabulated outcome.
    """
    if count < 0:
        raise DomainError("count must be >= 0")
    cdf = []
    cumulative = 0.0
    stream = _pmf_stream(spec)
    for _ in range(spec.term_cap):
        cumulative += next(stream)
        cdf.append(cumulative)
        if cumulative >= 1.0 - 1e-12:
            break
    else:
        raise NonConvergenceError("cumulative distribution did not reach its cutoff")
    rng = random.Random(seed)
    top = len(cdf) - 1
    return [min(bisect_right(cdf, rng.random()), top) for _ in range(count)]
