"""Hom-algebra domain errors."""
from hjj.core.errors import AppError, ValidationError


class AsymmetricProduct(ValidationError):
    """Structure constants are not commutative."""

    def __init__(self) -> None:
        super().__init__(message="Product is not commutative: c[i][j] != c[j][i]")


class InvalidFactor(AppError):
    """A factor of a tensor or current construction fails its axioms."""

    def __init__(self, construction: str, reason: str):
        super().__init__(
            code="INVALID_FACTOR",
            message=f"{construction}: {reason}",
            details={"construction": construction, "reason": reason},
        )


class InvalidForm(ValidationError):
    """A bilinear form does not have the required shape or symmetry."""

    def __init__(self, reason: str):
        super().__init__(message=f"Invalid bilinear form: {reason}", details={"reason": reason})
