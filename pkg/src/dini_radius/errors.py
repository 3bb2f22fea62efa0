"""Exception types shared across the package."""


class DiniRadiusError(Exception):
    """Base class for all package errors."""


class PoleError(DiniRadiusError, ValueError):
    """Gamma function evaluated at a non-positive integer."""


class SeriesConvergenceError(DiniRadiusError, ArithmeticError):
    """A power series did not meet its tolerance within ``max_terms`` terms."""


class DomainError(DiniRadiusError, ValueError):
    """Argument outside the range where an operation is defined."""


class UnsupportedOrderError(DomainError):
    """Order nu outside the range covered by the requested operation."""


class BracketError(DiniRadiusError, RuntimeError):
    """No sign change where one was expected."""
