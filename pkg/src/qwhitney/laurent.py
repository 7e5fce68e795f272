"""Exact Laurent polynomials in a single variable q.

Coefficients are exact rationals (`int` where possible, `fractions.Fraction`
otherwise).  A polynomial is stored densely as a valuation plus the coefficient
run from that exponent upward; the zero polynomial is the empty run.  All
operations are pure, and equality is exact term-by-term equality.

The canonical text form lists terms by ascending exponent as
``<num>/<den>*q^<exp>`` joined by `` + ``, omitting ``/<den>`` when the
denominator is 1 and ``*q^0`` entirely, e.g. ``-1*q^-1 + 2 + 1/3*q^2``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import EvalAtZeroError, InexactDivisionError

Rational = Union[int, Fraction]


def _norm_coeff(c):
    """Collapse Fractions with denominator 1 to int (fast path for products)."""
    if type(c) is int:
        return c
    if c.denominator == 1:
        return c.numerator
    return c


def _div_coeff(a, b):
    q = Fraction(a) / b
    return q.numerator if q.denominator == 1 else q


class LaurentPoly:
    """A Laurent polynomial with exact rational coefficients.

    >>> p = q_monomial(-1, -1) + 2 + Fraction(1, 3) * q_monomial(2)
    >>> str(p)
    '-1*q^-1 + 2 + 1/3*q^2'
    >>> p.evaluate(Fraction(1, 2))
    Fraction(1, 12)
    """

    __slots__ = ("val", "coeffs")

    def __init__(self, val: int, coeffs: Iterable[Rational]):
        coeffs = [_norm_coeff(c) for c in coeffs]
        lo, hi = 0, len(coeffs)
        while lo < hi and not coeffs[lo]:
            lo += 1
            val += 1
        while lo < hi and not coeffs[hi - 1]:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "val", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "val", val)
            object.__setattr__(self, "coeffs", tuple(coeffs[lo:hi]))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_terms(cls, terms: dict[int, Rational]) -> "LaurentPoly":
        """Build from an exponent -> coefficient mapping."""
        live = {e: c for e, c in terms.items() if c}
        if not live:
            return ZERO
        lo = min(live)
        hi = max(live)
        return cls(lo, [live.get(e, 0) for e in range(lo, hi + 1)])

    @classmethod
    def constant(cls, c: Rational) -> "LaurentPoly":
        return cls(0, (c,))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def valuation(self) -> int:
        """Lowest exponent (0 for the zero polynomial)."""
        return self.val

    @property
    def degree(self) -> int:
        """Highest exponent (-1 for the zero polynomial, by convention)."""
        return self.val + len(self.coeffs) - 1 if self.coeffs else -1

    def terms(self) -> list[tuple[int, Rational]]:
        """(exponent, coefficient) pairs, ascending, zero coefficients skipped."""
        return [(self.val + i, c) for i, c in enumerate(self.coeffs) if c]

    def coefficient(self, exponent: int) -> Rational:
        i = exponent - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- equality / hashing --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.val == other.val and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if not self.coeffs:
                return other == 0
            return self.val == 0 and len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        # Constant polynomials hash like their value so == stays hash-consistent.
        if not self.coeffs:
            return hash(0)
        if self.val == 0 and len(self.coeffs) == 1:
            return hash(self.coeffs[0])
        return hash((self.val, self.coeffs))

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(0, (other,))
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not self.coeffs:
            return rhs
        if not rhs.coeffs:
            return self
        lo = min(self.val, rhs.val)
        hi = max(self.val + len(self.coeffs), rhs.val + len(rhs.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.val - lo + i] += c
        for i, c in enumerate(rhs.coeffs):
            out[rhs.val - lo + i] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self):
        if not self.coeffs:
            return self
        return LaurentPoly(self.val, [-c for c in self.coeffs])

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return ZERO
            out = [0] * (len(a) + len(b) - 1)
            for i, ci in enumerate(a):
                if ci:
                    off = i
                    for j, cj in enumerate(b):
                        if cj:
                            out[off + j] += ci * cj
            return LaurentPoly(self.val + other.val, out)
        if isinstance(other, (int, Fraction)):
            if not other or not self.coeffs:
                return ZERO
            return LaurentPoly(self.val, [c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self.coeffs) == 1:
                c = Fraction(1, 1) / Fraction(self.coeffs[0]) ** (-n)
                return LaurentPoly(self.val * n, (c,))
            raise InexactDivisionError(
                "negative power of a non-monomial Laurent polynomial"
            )
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient c with c*other == self.

        Raises ZeroDivisionError when other is zero and InexactDivisionError
        when no Laurent quotient exists.
        """
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly(0, (other,))
        if not other.coeffs:
            raise ZeroDivisionError("Laurent division by zero")
        if not self.coeffs:
            return ZERO
        rem = list(self.coeffs)
        div = other.coeffs
        nq = len(rem) - len(div) + 1
        if nq <= 0:
            raise InexactDivisionError(f"{self} is not divisible by {other}")
        lead = div[-1]
        quo = [0] * nq
        for i in range(nq - 1, -1, -1):
            c = rem[i + len(div) - 1]
            if c:
                f = _div_coeff(c, lead)
                quo[i] = f
                for j, d in enumerate(div):
                    if d:
                        rem[i + j] -= f * d
        if any(rem[: len(div) - 1]):
            raise InexactDivisionError(f"{self} is not divisible by {other}")
        return LaurentPoly(self.val - other.val, quo)

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            return self.exact_div(other)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Laurent division by zero")
            if not self.coeffs:
                return ZERO
            return LaurentPoly(self.val, [_div_coeff(c, other) for c in self.coeffs])
        return NotImplemented

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, q0):
        """Value at q = q0, exact for rational q0, float for float q0.

        Raises EvalAtZeroError when q0 = 0 and a negative exponent is present.
        """
        if isinstance(q0, int):
            q0 = Fraction(q0)
        if not self.coeffs:
            return q0 * 0
        if q0 == 0:
            if self.val < 0:
                raise EvalAtZeroError("pole at q = 0")
            c0 = self.coeffs[0] if self.val == 0 else 0
            return c0 + q0 * 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        res = acc * q0**self.val
        if isinstance(res, Fraction):
            return res
        return res

    # -- text ----------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            parts.append(str(c) if e == 0 else f"{c}*q^{e}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self!s})"


ZERO = LaurentPoly(0, ())
ONE = LaurentPoly(0, (1,))


def q_monomial(e: int, coeff: Rational = 1) -> LaurentPoly:
    """The single-term polynomial coeff * q^e."""
    return LaurentPoly(e, (coeff,))


def as_laurent(x) -> LaurentPoly:
    """Coerce an exact scalar (int, Fraction, LaurentPoly) to a LaurentPoly."""
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly(0, (x,))
    raise TypeError(f"cannot interpret {type(x).__name__} as a Laurent polynomial")


def exact_div(a, b) -> LaurentPoly:
    """Module-level exact division; see LaurentPoly.exact_div."""
    return as_laurent(a).exact_div(as_laurent(b))


def laurent_eval(p: LaurentPoly, q0):
    """Module-level evaluation; see LaurentPoly.evaluate."""
    return p.evaluate(q0)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the canonical text form back into a polynomial.

    >>> parse_laurent("-1*q^-1 + 2 + 1/3*q^2") == (
    ...     q_monomial(-1, -1) + 2 + q_monomial(2, Fraction(1, 3)))
    True
    """
    text = text.strip()
    if text == "0":
        return ZERO
    terms: dict[int, Rational] = {}
    for token in text.split(" + "):
        token = token.strip()
        if "*q^" in token:
            cs, es = token.split("*q^")
            e = int(es)
        else:
            cs, e = token, 0
        if e in terms:
            raise ValueError(f"duplicate exponent {e} in {text!r}")
        terms[e] = Fraction(cs)
    return LaurentPoly.from_terms(terms)
