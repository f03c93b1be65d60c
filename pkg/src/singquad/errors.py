"""Exception types shared across the package."""

__all__ = [
    "SingquadError",
    "SizeError",
    "InputError",
    "DomainError",
    "ProfileError",
    "RangeError",
    "ConfigError",
    "InsufficientDataError",
    "NumericError",
    "IntegrandError",
    "OracleError",
]


class SingquadError(Exception):
    """Base class for all package-specific errors."""


class SizeError(SingquadError, ValueError):
    """Rule or transform size is invalid or unsupported."""


class InputError(SingquadError, ValueError):
    """Malformed input values (non-finite samples, wrong shape)."""


class DomainError(SingquadError, ValueError):
    """Argument lies outside the mathematical domain of the operation."""


class ProfileError(SingquadError, ValueError):
    """Singularity profile violates its invariants."""


class RangeError(SingquadError, ValueError):
    """Argument outside the documented exact-arithmetic range."""


class ConfigError(SingquadError, ValueError):
    """Invalid configuration (ladder too short, bad experiment setup)."""


class InsufficientDataError(SingquadError, ValueError):
    """Too few usable data points for a fit."""


class NumericError(SingquadError, RuntimeError):
    """A numeric procedure failed (non-convergence, invariant breach)."""


class IntegrandError(NumericError):
    """Integrand returned a non-finite value at ``node``."""

    def __init__(self, message: str, node: float | None = None):
        super().__init__(message)
        self.node = node


class OracleError(NumericError):
    """Reference oracle failed to converge to the requested tolerance."""
