"""(q,r)-Whitney numbers of both kinds, by several independent algorithms.

The first kind w(n,k) and second kind W(n,k) are the connection coefficients
between the bases {m^k [x]_q [x-1]_q ... [x-k+1]_q} and {(m[x]_q + r)^k}.
Everything here is driven by the weight sequence weight(i) = m [i]_q + r:

* triangle builders use the two-term recurrences (the production path);
* explicit forms (elementary-symmetric, composition enumeration,
  complete-homogeneous, alternating q-binomial sum) recompute single entries
  and exist to cross-check the recurrences;
* specializations: q-Stirling numbers (m=1, r=0), Dowling numbers and
  polynomials (row sums of the second kind).

A `shift` of s replaces the parameter pair (m, r) by (m q^s, m [s]_q + r),
which is the same as sliding the weight sequence: the shifted family's i-th
weight is weight(s + i).  The convolution identities need these families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from .errors import ZeroMError
from .modes import SYMBOLIC, FloatQ, QMode, Scalar, divide_exact, values_equal
from .qcore import complete_homogeneous, elementary_symmetric
from .report import IdentityReport


@dataclass(frozen=True)
class WhitneyParams:
    """The (m, r, q-mode) triple that fixes one Whitney family.

    m and r are stored as exact Fractions in every mode; float inputs are
    accepted only in float mode (converted exactly).
    """

    m: Fraction
    r: Fraction
    qmode: QMode = SYMBOLIC

    def __post_init__(self):
        allow_float = isinstance(self.qmode, FloatQ)
        object.__setattr__(self, "m", _as_fraction(self.m, allow_float, "m"))
        object.__setattr__(self, "r", _as_fraction(self.r, allow_float, "r"))

    def weight(self, i: int) -> Scalar:
        """m [i]_q + r in this mode's scalars."""
        mode = self.qmode
        return mode.of(self.m) * mode.q_int(i) + mode.of(self.r)

    def point(self, **indices) -> dict:
        """Parameter-point dict used in reports."""
        out = {"m": str(self.m), "r": str(self.r)}
        out.update(self.qmode.describe())
        out.update(indices)
        return out


def _as_fraction(x, allow_float: bool, name: str) -> Fraction:
    if isinstance(x, bool):
        raise TypeError(f"{name} must be a number, not bool")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, float) and allow_float:
        return Fraction(x)
    raise TypeError(f"{name} must be an int or Fraction (float only in float mode)")


@dataclass(frozen=True)
class Triangle:
    """Rows n = 0..nmax of one kind of Whitney numbers under one parameter set."""

    kind: str  # "first" | "second"
    params: WhitneyParams
    nmax: int
    rows: tuple

    def value(self, n: int, k: int) -> Scalar:
        """Entry at (n, k); 0 outside 0 <= k <= n, per the usual convention."""
        if 0 <= k <= n <= self.nmax:
            return self.rows[n][k]
        return 0

    def row(self, n: int) -> tuple:
        return self.rows[n]


@lru_cache(maxsize=512)
def _first_rows(params: WhitneyParams, nmax: int, shift: int) -> tuple:
    mode = params.qmode
    rows = [(mode.q_power(0),)]
    for n in range(nmax):
        prev = rows[n]
        wn = params.weight(shift + n)
        qn = mode.q_power(-n)
        row = []
        for k in range(n + 2):
            if k == 0:
                term = -(wn * prev[0])
            elif k == n + 1:
                term = prev[n]
            else:
                term = prev[k - 1] - wn * prev[k]
            row.append(qn * term)
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=512)
def _second_rows(params: WhitneyParams, nmax: int, shift: int) -> tuple:
    mode = params.qmode
    rows = [(mode.q_power(0),)]
    for n in range(nmax):
        prev = rows[n]
        row = []
        for k in range(n + 2):
            if k == 0:
                term = params.weight(shift) * prev[0]
            elif k == n + 1:
                term = mode.q_power(n) * prev[n]
            else:
                term = mode.q_power(k - 1) * prev[k - 1] + params.weight(shift + k) * prev[k]
            row.append(term)
        rows.append(tuple(row))
    return tuple(rows)


def whitney_first_triangle(params: WhitneyParams, nmax: int, shift: int = 0) -> Triangle:
    """First kind via w(n+1,k) = q^-n (w(n,k-1) - (m[n]_q + r) w(n,k))."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    return Triangle("first", params, nmax, _first_rows(params, nmax, shift))


def whitney_second_triangle(params: WhitneyParams, nmax: int, shift: int = 0) -> Triangle:
    """Second kind via W(n+1,k) = q^(k-1) W(n,k-1) + (m[k]_q + r) W(n,k)."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    return Triangle("second", params, nmax, _second_rows(params, nmax, shift))


def _check_nk(n: int, k: int):
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got (n, k) = ({n}, {k})")


def whitney_first_elementary(params: WhitneyParams, n: int, k: int) -> Scalar:
    """First kind as (-1)^(n-k) q^-C(n,2) e_{n-k} over weights i = 0..n-1."""
    _check_nk(n, k)
    sign = -1 if (n - k) % 2 else 1
    weights = [params.weight(i) for i in range(n)]
    return params.qmode.q_power(-comb(n, 2)) * elementary_symmetric(weights, n - k) * sign


def whitney_second_multisets(params: WhitneyParams, n: int, k: int) -> Scalar:
    """Second kind as q^C(k,2) h_{n-k} over weights j = 0..k."""
    _check_nk(n, k)
    weights = [params.weight(j) for j in range(k + 1)]
    return params.qmode.q_power(comb(k, 2)) * complete_homogeneous(weights, n - k)


def whitney_second_compositions(params: WhitneyParams, n: int, k: int) -> Scalar:
    """Second kind by enumerating compositions c_0 + ... + c_k = n - k.

    Each composition contributes prod_j weight(j)^(c_j); the shared prefix
    products are reused along the enumeration tree, but every composition is
    visited explicitly (this is the slow verification path on purpose).
    """
    _check_nk(n, k)
    weights = [params.weight(j) for j in range(k + 1)]
    s = n - k
    powers = [[1] for _ in range(k + 1)]  # powers[j][c] = weight(j)**c, lazily grown

    def power(j: int, c: int):
        col = powers[j]
        while len(col) <= c:
            col.append(col[-1] * weights[j])
        return col[c]

    total = 0

    def descend(j: int, left: int, partial):
        nonlocal total
        if j == k:
            total = total + (partial if left == 0 else partial * power(k, left))
            return
        descend(j + 1, left, partial)
        for c in range(1, left + 1):
            descend(j + 1, left - c, partial * power(j, c))

    descend(0, s, params.qmode.q_power(comb(k, 2)))
    return total


def whitney_second_alternating(params: WhitneyParams, n: int, k: int) -> Scalar:
    """Second kind as (1 / (m^k [k]_q!)) sum_l (-1)^(k-l) q^C(k-l,2) C(k,l)_q (m[l]_q+r)^n.

    The sum always divides exactly; a failed division signals an internal
    fault, not bad input.  Requires m != 0.
    """
    _check_nk(n, k)
    if params.m == 0:
        raise ZeroMError("the alternating form divides by m^k; m must be nonzero")
    mode = params.qmode
    acc = 0
    for ell in range(k + 1):
        sign = -1 if (k - ell) % 2 else 1
        term = mode.q_power(comb(k - ell, 2)) * mode.q_binomial(k, ell) * params.weight(ell) ** n
        acc = acc + term * sign
    denom = mode.of(params.m) ** k * mode.q_factorial(k)
    if not denom:
        raise ZeroDivisionError(f"[{k}]_q! vanishes at this q")
    return divide_exact(acc, denom)


# -- specializations ---------------------------------------------------------


def q_stirling_first(n: int, k: int, qmode: QMode = SYMBOLIC) -> Scalar:
    """Unsigned q-Stirling number of the first kind, q^-C(n,2) e_{n-k}([i]_q).

    Equals (-1)^(n-k) w(n,k) at (m, r) = (1, 0); reduces to the classical
    unsigned Stirling cycle number at q = 1.
    """
    params = WhitneyParams(Fraction(1), Fraction(0), qmode)
    sign = -1 if (n - k) % 2 else 1
    return whitney_first_elementary(params, n, k) * sign


def q_stirling_first_complement(n: int, k: int, qmode: QMode = SYMBOLIC) -> Scalar:
    """Cross-check form: q^-C(n,2) [n-1]_q! sum over complements of 1/prod [l]_q.

    The subsets {i_1 < ... < i_{n-k}} of {1..n-1} are traded for their
    (k-1)-element complements, so each summand is [n-1]_q! divided exactly by
    the product of the complement's q-integers.  Defined for 1 <= k <= n.
    """
    from itertools import combinations

    if not 1 <= k <= n:
        raise ValueError("complement form needs 1 <= k <= n")
    mode = qmode
    fact = mode.q_factorial(n - 1)
    acc = 0
    for complement in combinations(range(1, n), k - 1):
        den = mode.q_power(0)
        for ell in complement:
            den = den * mode.q_int(ell)
        acc = acc + divide_exact(fact, den)
    return mode.q_power(-comb(n, 2)) * acc


def q_stirling_second(n: int, k: int, qmode: QMode = SYMBOLIC) -> Scalar:
    """q-Stirling number of the second kind: W(n,k) at (m, r) = (1, 0)."""
    params = WhitneyParams(Fraction(1), Fraction(0), qmode)
    return whitney_second_triangle(params, n).value(n, k)


def dowling_number(params: WhitneyParams, n: int) -> Scalar:
    """Row sum of the second-kind triangle."""
    row = whitney_second_triangle(params, n).row(n)
    total = row[0]
    for v in row[1:]:
        total = total + v
    return total


def dowling_polynomial(params: WhitneyParams, n: int, x) -> Scalar:
    """sum_k W(n,k) x^k; equals dowling_number at x = 1 and r^n at x = 0."""
    xv = params.qmode.of(x)
    row = whitney_second_triangle(params, n).row(n)
    total = row[0]
    xp = xv
    for v in row[1:]:
        total = total + v * xp
        xp = xp * xv
    return total


def dowling_sequence(params: WhitneyParams, nmax: int) -> tuple:
    """(D(0), ..., D(nmax)) computed from a single triangle."""
    tri = whitney_second_triangle(params, nmax)
    out = []
    for n in range(nmax + 1):
        row = tri.row(n)
        total = row[0]
        for v in row[1:]:
            total = total + v
        out.append(total)
    return tuple(out)


# -- defining relations -------------------------------------------------------


def _q_falling(mode: QMode, x: int, n: int) -> Scalar:
    """[x]_q [x-1]_q ... [x-n+1]_q in mode scalars; zero factor kills it."""
    acc = mode.q_power(0)
    for i in range(n):
        if x - i == 0:
            return acc * 0
        acc = acc * mode.q_int(x - i)
    return acc


def defining_relation_check(params: WhitneyParams, ell: int, n: int,
                            tol: float = 1e-9) -> list[IdentityReport]:
    """Check both connection-coefficient relations at integer argument ell.

    First kind:  m^n [ell]_q ... [ell-n+1]_q = sum_k w(n,k) (m[ell]_q + r)^k.
    Second kind: (m[ell]_q + r)^n = sum_k m^k W(n,k) [ell]_q ... [ell-k+1]_q.

    Returns one report per relation; failures are reported, never raised.
    """
    if ell < 0 or n < 0:
        raise ValueError("ell and n must be >= 0")
    mode = params.qmode
    mval = mode.of(params.m)
    base = params.weight(ell)

    w = whitney_first_triangle(params, n)
    lhs1 = mval**n * _q_falling(mode, ell, n)
    rhs1 = 0
    for k in range(n + 1):
        rhs1 = rhs1 + w.value(n, k) * base**k

    W = whitney_second_triangle(params, n)
    lhs2 = base**n
    rhs2 = 0
    for k in range(n + 1):
        rhs2 = rhs2 + mval**k * W.value(n, k) * _q_falling(mode, ell, k)

    return [
        IdentityReport("defining_first", params.point(ell=ell, n=n), lhs1, rhs1,
                       values_equal(lhs1, rhs1, mode, tol)),
        IdentityReport("defining_second", params.point(ell=ell, n=n), lhs2, rhs2,
                       values_equal(lhs2, rhs2, mode, tol)),
    ]
