"""Catalogue of checkable identities, plus binomial and Hankel transforms.

Every identity in the catalogue compares a left side against an independently
computed right side at explicit index/parameter points and returns one
IdentityReport per point.  In exact modes (symbolic or rational q) a pass is
exact equality; in float mode it is a relative comparison.

The convolution identities internally use shifted parameter families: the
summand triangles belong to (m q^s, m [s]_q + r) for a shift s derived from
the indices, never supplied by callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable, Sequence

from .errors import (
    IncompatibleModeError,
    InsufficientSequenceError,
    UnknownIdentityError,
    ZeroMError,
)
from .modes import RationalQ, Scalar, divide_exact, values_equal
from .report import IdentityReport
from .whitney import (
    WhitneyParams,
    defining_relation_check,
    dowling_sequence,
    whitney_first_triangle,
    whitney_second_triangle,
)


class IdentityId(str, Enum):
    VERTICAL_FIRST = "vertical_first"
    VERTICAL_SECOND = "vertical_second"
    HORIZONTAL_FIRST = "horizontal_first"
    HORIZONTAL_SECOND = "horizontal_second"
    GENFUNC_SECOND = "genfunc_second"
    BOUNDARY = "boundary"
    R_DECOMP_FIRST = "r_decomp_first"
    R_DECOMP_SECOND = "r_decomp_second"
    R_SHIFT = "r_shift"
    CONVO_FIRST_A = "convo_first_a"
    CONVO_FIRST_B = "convo_first_b"
    CONVO_SECOND_A = "convo_second_a"
    CONVO_SECOND_B = "convo_second_b"
    DOWLING_BINOMIAL_FWD = "dowling_binomial_fwd"
    DOWLING_BINOMIAL_INV = "dowling_binomial_inv"
    ORTHOGONALITY = "orthogonality"
    PRIVAULT_Q = "privault_q"
    DEFINING_FIRST = "defining_first"
    DEFINING_SECOND = "defining_second"


#: (m, r) lattice used by the CLI and the acceptance suite.
DEFAULT_GRID: tuple[tuple[Fraction, Fraction], ...] = tuple(
    (Fraction(m), Fraction(r))
    for m, r in product((1, 2, Fraction(3, 2)), (0, 1, Fraction(5, 2)))
)

#: Row cap applied to orthogonality and to p+j in the convolutions.
HEAVY_CAP = 10

#: Argument cap for the defining relations.
DEFINING_ELL_CAP = 6

#: x values probed by the Dowling polynomial identity.
PRIVAULT_X_VALUES = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(3))

DEFAULT_NMAX_CEILING = 12


def _rep(identity: IdentityId, params: WhitneyParams, indices: dict,
         lhs: Scalar, rhs: Scalar, tol: float) -> IdentityReport:
    return IdentityReport(identity.value, params.point(**indices), lhs, rhs,
                          values_equal(lhs, rhs, params.qmode, tol))


def _check_vertical_first(params, nmax, tol):
    tri = whitney_first_triangle(params, nmax)
    mode = params.qmode
    reports = []
    for n in range(nmax):
        # suffix[j] = prod_{i=j+1..n} weight(i); empty product when j = n.
        suffix = [mode.q_power(0)] * (n + 1)
        for j in range(n - 1, -1, -1):
            suffix[j] = params.weight(j + 1) * suffix[j + 1]
        for k in range(n + 1):
            rhs = 0
            for j in range(k, n + 1):
                term = mode.q_power(comb(j, 2) - comb(n + 1, 2)) * tri.value(j, k) * suffix[j]
                rhs = rhs + (term if (n - j) % 2 == 0 else -term)
            reports.append(_rep(IdentityId.VERTICAL_FIRST, params, {"n": n, "k": k},
                                tri.value(n + 1, k + 1), rhs, tol))
    return reports


def _check_vertical_second(params, nmax, tol):
    tri = whitney_second_triangle(params, nmax)
    mode = params.qmode
    reports = []
    for n in range(nmax):
        for k in range(n + 1):
            w = params.weight(k + 1)
            rhs = 0
            power = mode.q_power(0)
            for j in range(n, k - 1, -1):
                rhs = rhs + power * tri.value(j, k)
                power = power * w
            rhs = mode.q_power(k) * rhs
            reports.append(_rep(IdentityId.VERTICAL_SECOND, params, {"n": n, "k": k},
                                tri.value(n + 1, k + 1), rhs, tol))
    return reports


def _check_horizontal_first(params, nmax, tol):
    # Relates row n to row n+1, so the triangle extends one row past nmax.
    tri = whitney_first_triangle(params, nmax + 1)
    mode = params.qmode
    reports = []
    for n in range(nmax + 1):
        wn = params.weight(n)
        for k in range(n + 1):
            rhs = 0
            power = mode.q_power(0)
            for j in range(n - k + 1):
                rhs = rhs + power * tri.value(n + 1, k + j + 1)
                power = power * wn
            rhs = mode.q_power(n) * rhs
            reports.append(_rep(IdentityId.HORIZONTAL_FIRST, params, {"n": n, "k": k},
                                tri.value(n, k), rhs, tol))
    return reports


def _check_horizontal_second(params, nmax, tol):
    tri = whitney_second_triangle(params, nmax + 1)
    mode = params.qmode
    reports = []
    for n in range(nmax + 1):
        for k in range(n + 1):
            rhs = 0
            # Telescoped ratio prod_{i=k+1..k+j} weight(i), grown with j.
            ratio = mode.q_power(0)
            for j in range(n - k + 1):
                term = (mode.q_power(comb(k, 2) - comb(k + j + 1, 2)) * ratio
                        * tri.value(n + 1, k + j + 1))
                rhs = rhs + (term if j % 2 == 0 else -term)
                ratio = ratio * params.weight(k + j + 1)
            reports.append(_rep(IdentityId.HORIZONTAL_SECOND, params, {"n": n, "k": k},
                                tri.value(n, k), rhs, tol))
    return reports


def _check_genfunc_second(params, nmax, tol):
    if not params.qmode.is_exact:
        raise IncompatibleModeError("genfunc_second needs an exact mode")
    tri = whitney_second_triangle(params, nmax)
    mode = params.qmode
    reports = []
    for k in range(nmax + 1):
        # Denominator prod_{i=0..k} (1 - weight(i) t) as coefficients in t.
        den = [mode.q_power(0)]
        for i in range(k + 1):
            w = params.weight(i)
            nxt = [den[0]]
            for d in range(1, len(den) + 1):
                high = den[d] if d < len(den) else 0
                nxt.append(high - w * den[d - 1])
            den = nxt
        # Multiply through and equate coefficients: c_n solves the recurrence.
        coeffs = []
        for n in range(nmax + 1):
            c = mode.q_power(comb(k, 2)) if n == k else 0
            for j in range(1, min(n, k + 1) + 1):
                c = c - den[j] * coeffs[n - j]
            coeffs.append(c)
            reports.append(_rep(IdentityId.GENFUNC_SECOND, params, {"k": k, "n": n},
                                c, tri.value(n, k), tol))
    return reports


def _check_boundary(params, nmax, tol):
    w = whitney_first_triangle(params, nmax)
    W = whitney_second_triangle(params, nmax)
    mode = params.qmode
    reports = []
    prod = mode.q_power(0)
    for n in range(nmax + 1):
        qneg = mode.q_power(-comb(n, 2))
        lhs = w.value(n, 0)
        rhs = qneg * prod if n % 2 == 0 else -(qneg * prod)
        reports.append(_rep(IdentityId.BOUNDARY, params, {"n": n, "entry": "first_k0"},
                            lhs, rhs, tol))
        reports.append(_rep(IdentityId.BOUNDARY, params, {"n": n, "entry": "first_kn"},
                            w.value(n, n), qneg, tol))
        reports.append(_rep(IdentityId.BOUNDARY, params, {"n": n, "entry": "second_k0"},
                            W.value(n, 0), mode.of(params.r) ** n * mode.q_power(0), tol))
        reports.append(_rep(IdentityId.BOUNDARY, params, {"n": n, "entry": "second_kn"},
                            W.value(n, n), mode.q_power(comb(n, 2)), tol))
        prod = prod * params.weight(n)
    return reports


def _r_splits(params) -> list[tuple[Fraction, Fraction]]:
    r1_values = {Fraction(0), Fraction(1), params.r - 1}
    return sorted((r1, params.r - r1) for r1 in r1_values)


def _check_r_decomp_first(params, nmax, tol):
    tri = whitney_first_triangle(params, nmax)
    mode = params.qmode
    reports = []
    for r1, r2 in _r_splits(params):
        split = WhitneyParams(params.m, r1, params.qmode)
        tri1 = whitney_first_triangle(split, nmax)
        neg_r2 = mode.of(-r2)
        for n in range(nmax + 1):
            for k in range(n + 1):
                rhs = 0
                power = neg_r2**0
                for j in range(k, n + 1):
                    rhs = rhs + comb(j, k) * power * tri1.value(n, j)
                    power = power * neg_r2
                reports.append(_rep(IdentityId.R_DECOMP_FIRST, params,
                                    {"r1": str(r1), "r2": str(r2), "n": n, "k": k},
                                    tri.value(n, k), rhs, tol))
    return reports


def _check_r_decomp_second(params, nmax, tol):
    tri = whitney_second_triangle(params, nmax)
    mode = params.qmode
    reports = []
    for r1, r2 in _r_splits(params):
        split = WhitneyParams(params.m, r1, params.qmode)
        tri1 = whitney_second_triangle(split, nmax)
        r2v = mode.of(r2)
        for n in range(nmax + 1):
            for k in range(n + 1):
                rhs = 0
                power = r2v**0
                for j in range(n, k - 1, -1):
                    rhs = rhs + comb(n, j) * power * tri1.value(j, k)
                    power = power * r2v
                reports.append(_rep(IdentityId.R_DECOMP_SECOND, params,
                                    {"r1": str(r1), "r2": str(r2), "n": n, "k": k},
                                    tri.value(n, k), rhs, tol))
    return reports


def _check_r_shift(params, nmax, tol):
    w = whitney_first_triangle(params, nmax)
    W = whitney_second_triangle(params, nmax)
    shifted = WhitneyParams(params.m, params.r - 1, params.qmode)
    w1 = whitney_first_triangle(shifted, nmax)
    W1 = whitney_second_triangle(shifted, nmax)
    reports = []
    for n in range(nmax + 1):
        for k in range(n + 1):
            rhs = 0
            for j in range(k, n + 1):
                term = comb(j, k) * w1.value(n, j)
                rhs = rhs + (term if (j - k) % 2 == 0 else -term)
            reports.append(_rep(IdentityId.R_SHIFT, params, {"kind": "first", "n": n, "k": k},
                                w.value(n, k), rhs, tol))
            rhs = 0
            for j in range(k, n + 1):
                rhs = rhs + comb(n, j) * W1.value(j, k)
            reports.append(_rep(IdentityId.R_SHIFT, params, {"kind": "second", "n": n, "k": k},
                                W.value(n, k), rhs, tol))
    return reports


def _convo_cap(nmax: int) -> int:
    return min(nmax, HEAVY_CAP)


def _check_convo_first_a(params, nmax, tol):
    cap = _convo_cap(nmax)
    tri = whitney_first_triangle(params, cap)
    mode = params.qmode
    reports = []
    for p in range(cap + 1):
        shifted = whitney_first_triangle(params, cap, shift=p)
        for j in range(cap - p + 1):
            for n in range(p + j + 1):
                rhs = 0
                for k in range(n + 1):
                    rhs = rhs + tri.value(p, k) * shifted.value(j, n - k)
                rhs = mode.q_power(-p * j) * rhs
                reports.append(_rep(IdentityId.CONVO_FIRST_A, params,
                                    {"p": p, "j": j, "n": n},
                                    tri.value(p + j, n), rhs, tol))
    return reports


def _check_convo_first_b(params, nmax, tol):
    # The left side lives on row n+1, so the base triangle gets one extra row.
    cap = _convo_cap(nmax)
    tri = whitney_first_triangle(params, cap + 1)
    mode = params.qmode
    shifted = {s: whitney_first_triangle(params, cap, shift=s) for s in range(1, cap + 2)}
    reports = []
    for p in range(cap + 1):
        for j in range(cap - p + 1):
            for n in range(p + j, cap + 1):
                rhs = 0
                for k in range(n + 1):
                    a = tri.value(k, p)
                    if a:
                        rhs = rhs + (mode.q_power(k * k - n * k - n) * a
                                     * shifted[k + 1].value(n - k, j))
                reports.append(_rep(IdentityId.CONVO_FIRST_B, params,
                                    {"p": p, "j": j, "n": n},
                                    tri.value(n + 1, j + p + 1), rhs, tol))
    return reports


def _check_convo_second_a(params, nmax, tol):
    # The left side lives on row n+1, so the base triangle gets one extra row.
    cap = _convo_cap(nmax)
    tri = whitney_second_triangle(params, cap + 1)
    mode = params.qmode
    reports = []
    for p in range(cap + 1):
        shifted = whitney_second_triangle(params, cap, shift=p + 1)
        for j in range(cap - p + 1):
            for n in range(p + j, cap + 1):
                rhs = 0
                for k in range(n + 1):
                    a = tri.value(k, p)
                    if a:
                        rhs = rhs + a * shifted.value(n - k, j)
                rhs = mode.q_power(p + p * j + j) * rhs
                reports.append(_rep(IdentityId.CONVO_SECOND_A, params,
                                    {"p": p, "j": j, "n": n},
                                    tri.value(n + 1, j + p + 1), rhs, tol))
    return reports


def _check_convo_second_b(params, nmax, tol):
    cap = _convo_cap(nmax)
    tri = whitney_second_triangle(params, cap)
    mode = params.qmode
    shifted = {s: whitney_second_triangle(params, cap, shift=s) for s in range(cap + 1)}
    reports = []
    for p in range(cap + 1):
        for j in range(cap - p + 1):
            for n in range(p + j + 1):
                rhs = 0
                for k in range(n + 1):
                    a = tri.value(p, k)
                    if a:
                        rhs = rhs + (mode.q_power(n * k - k * k) * a
                                     * shifted[k].value(j, n - k))
                reports.append(_rep(IdentityId.CONVO_SECOND_B, params,
                                    {"p": p, "j": j, "n": n},
                                    tri.value(p + j, n), rhs, tol))
    return reports


def _check_dowling_binomial_fwd(params, nmax, tol):
    seq = dowling_sequence(params, nmax)
    up = dowling_sequence(WhitneyParams(params.m, params.r + 1, params.qmode), nmax)
    transformed = binomial_transform(seq)
    return [_rep(IdentityId.DOWLING_BINOMIAL_FWD, params, {"n": n},
                 up[n], transformed[n], tol) for n in range(nmax + 1)]


def _check_dowling_binomial_inv(params, nmax, tol):
    seq = dowling_sequence(params, nmax)
    up = dowling_sequence(WhitneyParams(params.m, params.r + 1, params.qmode), nmax)
    inverted = binomial_inverse(up)
    return [_rep(IdentityId.DOWLING_BINOMIAL_INV, params, {"n": n},
                 seq[n], inverted[n], tol) for n in range(nmax + 1)]


def _check_orthogonality(params, nmax, tol):
    if params.m == 0:
        raise ZeroMError("orthogonality requires m != 0")
    cap = min(nmax, HEAVY_CAP)
    w = whitney_first_triangle(params, cap)
    W = whitney_second_triangle(params, cap)
    one = params.qmode.q_power(0)
    reports = []
    for n in range(cap + 1):
        for j in range(n + 1):
            target = one if n == j else 0
            lhs = 0
            for k in range(j, n + 1):
                lhs = lhs + w.value(n, k) * W.value(k, j)
            reports.append(_rep(IdentityId.ORTHOGONALITY, params,
                                {"n": n, "j": j, "direction": "wW"}, lhs, target, tol))
            lhs = 0
            for k in range(j, n + 1):
                lhs = lhs + W.value(n, k) * w.value(k, j)
            reports.append(_rep(IdentityId.ORTHOGONALITY, params,
                                {"n": n, "j": j, "direction": "Ww"}, lhs, target, tol))
    return reports


def _check_privault_q(params, nmax, tol):
    from .whitney import dowling_polynomial

    cap = min(nmax, HEAVY_CAP)
    mode = params.qmode
    mval = mode.of(params.m)
    rval = mode.of(params.r)
    reports = []
    stirling = whitney_second_triangle(
        WhitneyParams(Fraction(1), Fraction(0), mode), cap)
    mpow = [mval**0]
    for _ in range(cap):
        mpow.append(mpow[-1] * mval)
    for n in range(cap + 1):
        for x in PRIVAULT_X_VALUES:
            xv = mode.of(x)
            xpow = [xv**0]
            for _ in range(n):
                xpow.append(xpow[-1] * xv)
            rhs = 0
            for k in range(n + 1):
                inner = 0
                for j in range(k + 1):
                    s = stirling.value(k, j)
                    if s:
                        inner = inner + mpow[k - j] * s * xpow[j]
                rhs = rhs + comb(n, k) * rval ** (n - k) * inner
            lhs = dowling_polynomial(params, n, x)
            reports.append(_rep(IdentityId.PRIVAULT_Q, params, {"n": n, "x": str(x)},
                                lhs, rhs, tol))
    return reports


def _check_defining(which: IdentityId):
    def check(params, nmax, tol):
        reports = []
        pick = 0 if which is IdentityId.DEFINING_FIRST else 1
        for ell in range(DEFINING_ELL_CAP + 1):
            for n in range(nmax + 1):
                reports.append(defining_relation_check(params, ell, n, tol)[pick])
        return reports

    return check


_CHECKERS: dict[IdentityId, Callable] = {
    IdentityId.VERTICAL_FIRST: _check_vertical_first,
    IdentityId.VERTICAL_SECOND: _check_vertical_second,
    IdentityId.HORIZONTAL_FIRST: _check_horizontal_first,
    IdentityId.HORIZONTAL_SECOND: _check_horizontal_second,
    IdentityId.GENFUNC_SECOND: _check_genfunc_second,
    IdentityId.BOUNDARY: _check_boundary,
    IdentityId.R_DECOMP_FIRST: _check_r_decomp_first,
    IdentityId.R_DECOMP_SECOND: _check_r_decomp_second,
    IdentityId.R_SHIFT: _check_r_shift,
    IdentityId.CONVO_FIRST_A: _check_convo_first_a,
    IdentityId.CONVO_FIRST_B: _check_convo_first_b,
    IdentityId.CONVO_SECOND_A: _check_convo_second_a,
    IdentityId.CONVO_SECOND_B: _check_convo_second_b,
    IdentityId.DOWLING_BINOMIAL_FWD: _check_dowling_binomial_fwd,
    IdentityId.DOWLING_BINOMIAL_INV: _check_dowling_binomial_inv,
    IdentityId.ORTHOGONALITY: _check_orthogonality,
    IdentityId.PRIVAULT_Q: _check_privault_q,
    IdentityId.DEFINING_FIRST: _check_defining(IdentityId.DEFINING_FIRST),
    IdentityId.DEFINING_SECOND: _check_defining(IdentityId.DEFINING_SECOND),
}


def verify(identity, params: WhitneyParams, nmax: int = DEFAULT_NMAX_CEILING, *,
           ceiling: int = DEFAULT_NMAX_CEILING, tol: float = 1e-9) -> list[IdentityReport]:
    """Check one identity at one parameter point over its index lattice."""
    try:
        identity = IdentityId(identity)
    except ValueError:
        raise UnknownIdentityError(f"unknown identity {identity!r}") from None
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    if nmax > ceiling:
        raise ValueError(f"nmax {nmax} exceeds the ceiling {ceiling}")
    return _CHECKERS[identity](params, nmax, tol)


def verify_all(params: WhitneyParams, nmax: int = DEFAULT_NMAX_CEILING, *,
               ceiling: int = DEFAULT_NMAX_CEILING, tol: float = 1e-9) -> list[IdentityReport]:
    """Run the whole catalogue at one parameter point."""
    reports = []
    for identity in IdentityId:
        reports.extend(verify(identity, params, nmax, ceiling=ceiling, tol=tol))
    return reports


# -- sequence transforms -------------------------------------------------------


def binomial_transform(seq: Sequence[Scalar]) -> list[Scalar]:
    """f_n = sum_j C(n,j) g_j."""
    if not seq:
        raise ValueError("binomial_transform needs a nonempty sequence")
    return [sum(comb(n, j) * seq[j] for j in range(n + 1)) for n in range(len(seq))]


def binomial_inverse(seq: Sequence[Scalar]) -> list[Scalar]:
    """g_n = sum_j (-1)^(n-j) C(n,j) f_j; inverse of binomial_transform."""
    if not seq:
        raise ValueError("binomial_inverse needs a nonempty sequence")
    out = []
    for n in range(len(seq)):
        acc = 0
        for j in range(n + 1):
            term = comb(n, j) * seq[j]
            acc = acc + (term if (n - j) % 2 == 0 else -term)
        out.append(acc)
    return out


def _det_fraction_free(matrix: list[list]) -> Scalar:
    """Bareiss one-step fraction-free elimination; exact in any exact scalar."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot_row = next((i for i in range(col, n) if m[i][col]), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        pivot = m[col][col]
        for i in range(col + 1, n):
            ric = m[i][col]
            row_i = m[i]
            row_c = m[col]
            for j in range(col + 1, n):
                num = row_i[j] * pivot - ric * row_c[j]
                row_i[j] = num if prev == 1 else divide_exact(num, prev)
            row_i[col] = 0
        prev = pivot
    out = m[n - 1][n - 1]
    return out if sign == 1 else -out


def hankel_transform(seq: Sequence[Scalar], order: int) -> list[Scalar]:
    """Determinants of the leading Hankel matrices [seq_(i+j)], sizes 1..order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if len(seq) < 2 * order - 1:
        raise InsufficientSequenceError(
            f"need at least {2 * order - 1} terms for order {order}, got {len(seq)}")
    out = []
    for size in range(1, order + 1):
        matrix = [[seq[i + j] for j in range(size)] for i in range(size)]
        out.append(_det_fraction_free(matrix))
    return out


@dataclass(frozen=True)
class HankelProbeResult:
    """Hankel sequences of the Dowling numbers across several r values."""

    m: Fraction
    q0: Fraction
    order: int
    rows: dict
    equal: bool
    common: tuple | None


def hankel_probe(m, r_values: Sequence, q0, order: int) -> HankelProbeResult:
    """Compare Hankel transforms of (D(n))_n across the given r values.

    The sequences are binomial transforms of one another when the r values
    are consecutive integers apart, so their Hankel transforms coincide; the
    probe recomputes them independently and reports whether they agree.
    """
    mode = RationalQ(Fraction(q0))
    rows = {}
    for r in r_values:
        params = WhitneyParams(Fraction(m), Fraction(r), mode)
        seq = dowling_sequence(params, 2 * order - 2 if order else 0)
        rows[Fraction(r)] = tuple(hankel_transform(seq, order))
    values = list(rows.values())
    equal = all(v == values[0] for v in values)
    return HankelProbeResult(Fraction(m), Fraction(q0), order, rows, equal,
                             values[0] if equal and values else None)
