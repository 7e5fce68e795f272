"""Scalar modes: symbolic q, exact rational q, and floating-point q.

A mode supplies the handful of primitives the generic algorithms need
(powers of q, q-integers, injection of exact rational constants) so that
every higher-level computation runs unchanged over Laurent polynomials,
Fractions, or floats.  Values from different modes never mix silently:
LaurentPoly arithmetic rejects floats, and the exact modes reject float
constants with a TypeError.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from . import qcore
from .laurent import LaurentPoly, parse_laurent, q_monomial

Scalar = Union[int, Fraction, float, LaurentPoly]


def _exact_fraction(x, what: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"{what} must be an int or Fraction, got {type(x).__name__}")
    return Fraction(x)


class _SymbolicQ:
    """q kept as a formal variable; every value is a LaurentPoly."""

    tag = "symbolic"
    is_exact = True

    def q_power(self, e: int) -> LaurentPoly:
        return q_monomial(e)

    def q_int(self, n: int) -> LaurentPoly:
        return qcore.q_integer(n)

    def q_factorial(self, n: int) -> LaurentPoly:
        return qcore.q_factorial(n)

    def q_binomial(self, n: int, k: int) -> LaurentPoly:
        return qcore.q_binomial(n, k)

    def of(self, x) -> Fraction:
        return _exact_fraction(x, "symbolic-mode constant")

    def describe(self) -> dict:
        return {"qmode": self.tag}

    def __repr__(self):
        return "SYMBOLIC"


SYMBOLIC = _SymbolicQ()


@lru_cache(maxsize=None)
def _rational_q_int(q0: Fraction, n: int) -> Fraction:
    if q0 == 1:
        return Fraction(n)
    return (q0**n - 1) / (q0 - 1)


@dataclass(frozen=True)
class RationalQ:
    """q fixed to a nonzero exact rational; every value is a Fraction."""

    q0: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q0", _exact_fraction(self.q0, "rational q0"))
        if self.q0 == 0:
            raise ValueError("rational mode needs q0 != 0")

    tag = "rational"
    is_exact = True

    def q_power(self, e: int) -> Fraction:
        return self.q0**e

    def q_int(self, n: int) -> Fraction:
        return _rational_q_int(self.q0, n)

    def q_factorial(self, n: int) -> Fraction:
        out = Fraction(1)
        for i in range(1, n + 1):
            out *= self.q_int(i)
        return out

    def q_binomial(self, n: int, k: int) -> Fraction:
        return qcore.q_binomial(n, k).evaluate(self.q0)

    def of(self, x) -> Fraction:
        return _exact_fraction(x, "rational-mode constant")

    def describe(self) -> dict:
        return {"qmode": self.tag, "q0": str(self.q0)}


@dataclass(frozen=True)
class FloatQ:
    """q fixed to a nonzero float; every value is a float."""

    q0: float

    def __post_init__(self):
        object.__setattr__(self, "q0", float(self.q0))
        if self.q0 == 0.0:
            raise ValueError("float mode needs q0 != 0")

    tag = "float"
    is_exact = False

    def q_power(self, e: int) -> float:
        return self.q0**e

    def q_int(self, n: int) -> float:
        if self.q0 == 1.0:
            return float(n)
        return (1.0 - self.q0**n) / (1.0 - self.q0)

    def q_factorial(self, n: int) -> float:
        out = 1.0
        for i in range(1, n + 1):
            out *= self.q_int(i)
        return out

    def q_binomial(self, n: int, k: int) -> float:
        if k < 0 or k > n:
            return 0.0
        return float(qcore.q_binomial(n, k).evaluate(self.q0))

    def of(self, x) -> float:
        return float(x)

    def describe(self) -> dict:
        return {"qmode": self.tag, "q0": self.q0}


QMode = Union[_SymbolicQ, RationalQ, FloatQ]


def parse_qmode(text: str) -> QMode:
    """'symbolic' or a rational literal like '1/2' or '-3'."""
    text = text.strip()
    if text == "symbolic":
        return SYMBOLIC
    return RationalQ(Fraction(text))


def canonical_text(value: Scalar) -> str:
    """Render a scalar in its canonical text form."""
    if isinstance(value, LaurentPoly):
        return str(value)
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    raise TypeError(f"cannot render {type(value).__name__}")


def parse_scalar(text: str, mode: QMode) -> Scalar:
    """Inverse of canonical_text for values produced under the given mode."""
    if mode.tag == "symbolic":
        return parse_laurent(text)
    if mode.tag == "rational":
        return Fraction(text)
    return float(text)


def values_equal(lhs: Scalar, rhs: Scalar, mode: QMode, tol: float = 1e-9) -> bool:
    """Exact equality in exact modes, relative tolerance in float mode."""
    if mode.is_exact:
        return lhs == rhs
    return abs(lhs - rhs) <= tol * max(1.0, abs(rhs))


def divide_exact(num: Scalar, den: Scalar):
    """Division that is exact in exact modes and plain / on floats."""
    if isinstance(num, LaurentPoly) or isinstance(den, LaurentPoly):
        from .laurent import as_laurent

        return as_laurent(num).exact_div(as_laurent(den))
    if isinstance(num, float) or isinstance(den, float):
        return num / den
    q = Fraction(num) / Fraction(den)
    return q.numerator if q.denominator == 1 else q
