"""Error hierarchy shared by every layer.

Errors signal bad input or a failed internal consistency check; a negative verdict
(an axiom that does not hold) is a report, never an error.
"""
from typing import Any


class AppError(Exception):
    """Base application error with a stable code and structured details."""

    def __init__(
        self,
        code: str,
        message: str,
        status_code: int = 400,
        details: dict[str, Any] | None = None,
    ):
        self.code = code
        self.message = message
        self.status_code = status_code
        self.details = details or {}
        super().__init__(message)

    def payload(self) -> dict[str, Any]:
        """The "error" object of the HTTP envelope and of CLI --json failures."""
        return {"code": self.code, "message": self.message, "details": self.details}


class ValidationError(AppError):
    """Input that cannot be computed with."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(
            code="VALIDATION_ERROR",
            message=message,
            status_code=422,
            details=details,
        )


class ConflictError(AppError):
    """Input that contradicts itself."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(
            code="CONFLICT",
            message=message,
            status_code=409,
            details=details,
        )


class InvariantViolation(AppError):
    """An identity that holds on verified inputs failed; this is a bug, not bad input."""

    def __init__(self, code: str, message: str, details: dict[str, Any] | None = None):
        super().__init__(code=code, message=message, status_code=500, details=details)
