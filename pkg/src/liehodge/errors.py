"""Exception types shared across the package."""


class LieHodgeError(Exception):
    """Base class for all errors raised by liehodge."""


class ConfigurationError(LieHodgeError, ValueError):
    """Unsupported root-system label or similar static configuration."""


class UsageError(LieHodgeError, ValueError):
    """Arguments that do not fit together (rank mismatch, non-dominant input, ...)."""


class DomainError(LieHodgeError, ValueError):
    """Input is well formed but outside the mathematical domain of the operation."""


class NotACharacterError(LieHodgeError, ValueError):
    """Peeling a character produced a negative multiplicity."""


class InconsistentInputError(LieHodgeError, ValueError):
    """Numerical inputs violate an identity they are required to satisfy."""


class InvariantViolation(LieHodgeError, RuntimeError):
    """An internal cross-check failed."""
