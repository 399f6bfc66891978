"""Exception types shared across the library, CLI, and service."""


class ScalingError(ValueError):
    """Base class for all domain errors raised by this package."""


class InvalidArgumentError(ScalingError):
    """An input violates its documented domain (wrong range, non-finite, ...)."""


class UnreachableTargetError(ScalingError):
    """The requested loss target cannot be represented at finite precision."""
