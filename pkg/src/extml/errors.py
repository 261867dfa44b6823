"""Exception hierarchy shared by all evaluation modules."""

from __future__ import annotations


class ExtMlError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ExtMlError, ValueError):
    """An argument lies outside the domain an operation supports."""


class PoleError(DomainError):
    """A gamma factor was requested exactly on one of its poles."""


class ConvergenceError(ExtMlError, ArithmeticError):
    """A series or quadrature failed to reach the requested tolerance.

    ``partial`` holds the best estimate accumulated before giving up.
    """

    def __init__(self, message: str, partial: float | None = None):
        super().__init__(message)
        self.partial = partial


class EvaluationError(ExtMlError, ArithmeticError):
    """An integrand returned a non-finite value at a quadrature node.

    ``abscissa`` is the offending evaluation point.
    """

    def __init__(self, message: str, abscissa: float | None = None):
        super().__init__(message)
        self.abscissa = abscissa


class AccuracyLossError(ExtMlError, ArithmeticError):
    """An asymptotic expansion could not reach the requested accuracy.

    ``estimate`` carries the best value obtained before the terms started
    growing.
    """

    def __init__(self, message: str, estimate: float | None = None):
        super().__init__(message)
        self.estimate = estimate
