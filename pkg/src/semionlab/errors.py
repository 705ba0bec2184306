"""Exception types shared across the package."""


class SemionLabError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(SemionLabError):
    """Operands act on different site counts or register sizes."""


class RepresentationError(SemionLabError):
    """Operators from different representations were mixed."""


class CapacityError(SemionLabError):
    """A dense construction was requested above the configured limit."""


class ConvergenceError(SemionLabError):
    """An iterative eigensolve did not converge to tolerance."""


class ZeroProjectionError(SemionLabError):
    """A stabilizer projection annihilated the state completely."""


class DegenerateNetworkError(SemionLabError):
    """Circuit capacitance network has a non-positive determinant."""


class ConfigError(SemionLabError):
    """A run configuration failed validation."""
