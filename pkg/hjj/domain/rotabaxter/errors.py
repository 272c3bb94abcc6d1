"""Rota-Baxter domain errors."""
from hjj.core.errors import ValidationError


class NotRotaBaxter(ValidationError):
    """An operation needs a relative Rota-Baxter operator."""

    def __init__(self, failed: str, args: tuple[int, ...] | None = None):
        details: dict[str, object] = {"check": failed}
        if args is not None:
            details["args"] = list(args)
        super().__init__(
            message=f"Operator is not a relative Rota-Baxter operator ({failed} fails)",
            details=details,
        )


class RepresentationMismatch(ValidationError):
    """Two operators are relative to different representations."""

    def __init__(self) -> None:
        super().__init__(message="Operators are defined over different representations")


class PreconditionFailed(ValidationError):
    def __init__(self, condition: str):
        super().__init__(
            message=f"Precondition failed: {condition}",
            details={"condition": condition},
        )


class NotAGenerator(ValidationError):
    """A map does not generate a linear deformation of the operator."""

    def __init__(self, failed: str):
        super().__init__(
            message=f"Map does not generate a linear deformation ({failed} fails)",
            details={"check": failed},
        )
