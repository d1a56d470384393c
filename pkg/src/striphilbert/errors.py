"""Exception hierarchy for striphilbert.

Argument and precondition violations derive from both the package base error
and ValueError, so callers may catch either.
"""


class StripHilbertError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(StripHilbertError, ValueError):
    """An argument violates an operation's precondition."""


class NonZeroMean(DomainError):
    """Samples fail the zero-mean requirement."""


class AliasError(DomainError):
    """Requested coefficient order violates the Nyquist bound 2N < M."""


class NomeOutOfRange(DomainError):
    """Nome q outside [0, 1)."""


class TolTooSmall(DomainError):
    """Requested absolute tolerance is below 4 ulp of the result."""


class NonPositiveX(DomainError):
    """Half-period parameter x must be positive."""


class NonPositiveDepth(DomainError):
    """Strip depth d must be positive."""


class TooLarge(DomainError):
    """Integer argument exceeds the desk-scale guard."""


class SingularPoint(DomainError):
    """Kernel evaluated at a point of 2*pi*Z, where it has a pole."""


class Overflow(StripHilbertError, ArithmeticError):
    """An intermediate hyperbolic term left the representable range.

    Kept for API completeness: the series evaluators work in factored
    exponential form throughout, so no code path currently raises this.
    """


class NoConvergence(StripHilbertError, RuntimeError):
    """An iterative refinement or series loop hit its hard iteration cap."""
