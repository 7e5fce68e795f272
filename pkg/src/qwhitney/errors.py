"""Exception types shared across the package."""


class InexactDivisionError(ArithmeticError):
    """Exact division was requested but no exact quotient exists."""


class EvalAtZeroError(ZeroDivisionError):
    """A Laurent polynomial with negative exponents was evaluated at q = 0."""


class DomainError(ValueError):
    """A numeric argument is outside the function's domain."""


class DivergentSeriesError(DomainError):
    """The requested series diverges for these arguments."""


class NonConvergenceError(ArithmeticError):
    """A truncated series failed to meet its tolerance within the term cap."""


class ZeroMError(ValueError):
    """m = 0 where a division by m is required."""


class UnknownIdentityError(ValueError):
    """The identity name is not in the catalogue."""


class IncompatibleModeError(ValueError):
    """The operation does not support the requested scalar mode."""


class InsufficientSequenceError(ValueError):
    """The sequence is too short for the requested Hankel order."""
