"""Shared exception types."""


class ParameterError(ValueError):
    """An argument, file, or configuration value is invalid."""


class ExhaustionError(RuntimeError):
    """An exhaustive enumeration would exceed its configured limit.

    Raised instead of ever falling back to an approximation.
    """


class DefectError(RuntimeError):
    """Internal inconsistency: a result failed its own verification."""
