"""Shared exception types."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class PathError(DomainError):
    """A continuation path touches or passes through a singular point."""


class ToleranceError(RuntimeError):
    """An adaptive routine could not reach the requested accuracy."""
