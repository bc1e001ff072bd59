"""Exception types shared across the package."""


class OracleLensError(Exception):
    """Base class for all errors raised by oracle_lens."""


class DimensionError(OracleLensError, ValueError):
    """Operands have incompatible lengths or matrix dimensions."""


class DomainError(OracleLensError, ValueError):
    """An argument lies outside the domain of an operation."""


class ValidationError(OracleLensError, ValueError):
    """Input failed a structural check (e.g. a gate is not unitary)."""


class ResourceError(OracleLensError, RuntimeError):
    """A configured size cap or budget would be exceeded."""


class UsageError(OracleLensError, ValueError):
    """Invalid command-line or run-configuration input."""
