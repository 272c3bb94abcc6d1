"""Linear algebra errors."""
from hjj.core.errors import AppError, ValidationError


class LinalgError(AppError):
    """Base linear algebra error."""
    pass


class DimensionMismatch(LinalgError):
    """Operands have incompatible shapes."""

    def __init__(self, operation: str, expected: object, got: object):
        super().__init__(
            code="DIMENSION_MISMATCH",
            message=f"{operation}: expected {expected}, got {got}",
            details={"operation": operation, "expected": str(expected), "got": str(got)},
        )


class NotASubspace(LinalgError):
    """A subspace is not contained in the space it should lie in."""

    def __init__(self, message: str = "Subspace is not contained in the enclosing space"):
        super().__init__(code="NOT_A_SUBSPACE", message=message)


class SingularMatrix(LinalgError):
    """Matrix has no inverse."""

    def __init__(self, size: int):
        super().__init__(
            code="SINGULAR_MATRIX",
            message=f"{size}x{size} matrix is not invertible",
            details={"size": size},
        )


class ScalarFormatError(ValidationError):
    """A scalar string is not of the form p or p/q."""

    def __init__(self, value: object):
        super().__init__(
            message=f"Invalid rational scalar: {value!r}",
            details={"value": str(value)},
        )
