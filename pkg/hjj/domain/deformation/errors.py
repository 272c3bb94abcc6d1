"""Deformation domain errors."""
from hjj.core.errors import InvariantViolation, ValidationError


class InvalidSeries(ValidationError):
    """A formal series violates its structural invariants."""

    def __init__(self, reason: str):
        super().__init__(message=f"Invalid series: {reason}", details={"reason": reason})


class BridgeViolation(InvariantViolation):
    """Two independent routes to the same verdict disagree."""

    def __init__(self, bridge: str, details: dict[str, object] | None = None):
        super().__init__(
            "BRIDGE_VIOLATION",
            f"Independent computations disagree: {bridge}",
            {"bridge": bridge, **(details or {})},
        )
