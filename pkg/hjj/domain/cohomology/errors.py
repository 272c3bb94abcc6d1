"""Cohomology domain errors."""
from hjj.core.errors import InvariantViolation, ValidationError


class DegreeCap(ValidationError):
    """Requested cochain degree is outside the configured range."""

    def __init__(self, degree: int, cap: int):
        super().__init__(
            message=f"Degree {degree} is outside the allowed range 0..{cap}",
            details={"degree": degree, "max_degree": cap},
        )


class ZigzagViolation(InvariantViolation):
    """d^n composed with delta^(n-1) is nonzero on verified inputs."""

    def __init__(self, degree: int):
        super().__init__(
            "ZIGZAG_VIOLATION",
            f"d^{degree} o delta^{degree - 1} is nonzero on a verified representation",
            {"degree": degree},
        )


class EquivarianceViolation(InvariantViolation):
    """The coboundary of a compatible cochain is not compatible."""

    def __init__(self, degree: int, operator: str):
        super().__init__(
            "EQUIVARIANCE_VIOLATION",
            f"{operator}^{degree} does not map compatible cochains to compatible cochains",
            {"degree": degree, "operator": operator},
        )
