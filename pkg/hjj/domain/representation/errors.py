"""Representation domain errors."""
from hjj.core.errors import AppError, ValidationError


class SingularTwist(AppError):
    """A negative power of a non-invertible twist map was requested."""

    def __init__(self, what: str = "alpha", power: int | None = None):
        message = f"{what} is not invertible"
        if power is not None:
            message += f"; power {power} is undefined"
        super().__init__(
            code="SINGULAR_TWIST",
            message=message,
            details={"map": what, "power": power},
        )


class AlgebraMismatch(ValidationError):
    """Objects that must share a base algebra do not."""

    def __init__(self, operation: str):
        super().__init__(
            message=f"{operation}: operands are defined over different algebras",
            details={"operation": operation},
        )


class NotAHomIdeal(ValidationError):
    """A subspace is not stable under the twist map and multiplication."""

    def __init__(self) -> None:
        super().__init__(message="Subspace is not a Hom-ideal")
