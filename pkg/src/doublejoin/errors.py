"""Exception types shared across the package."""

from __future__ import annotations


class PreconditionError(ValueError):
    """An input violates a documented hypothesis (disconnected, non-regular, ...)."""


class ConditionViolation(PreconditionError):
    """Block data does not satisfy one of the double join matrix conditions."""

    def __init__(self, condition: str, detail: str) -> None:
        self.condition = condition
        super().__init__(f"condition ({condition}) violated: {detail}")


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
