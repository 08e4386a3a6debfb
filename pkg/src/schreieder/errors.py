"""Exception types shared across the package."""


class SchreiederError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SchreiederError, ValueError):
    """An argument lies outside the range the computation is defined for."""


class InconsistentConfiguration(SchreiederError):
    """A fiber configuration violates a global identity (Euler sum, rank, ...)."""


class UnsupportedFiber(SchreiederError, ValueError):
    """The requested datum is not tabulated for this Kodaira type."""


class NonUnimodular(SchreiederError, ValueError):
    """A matrix handed to the SL(2, Z) routines has determinant other than 1."""


class TableUnavailable(SchreiederError):
    """No congruence-subgroup table has been ingested."""
