"""Global exception handlers."""
from typing import Any

from fastapi import Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from hjj.core.errors import AppError
from hjj.core.logging import get_logger
from hjj.presentation.middleware.request_id import get_request_id

logger = get_logger(__name__)


def create_error_response(error: dict[str, Any], status_code: int) -> JSONResponse:
    """Wrap an error object in the envelope shared by every failure."""
    return JSONResponse(
        status_code=status_code,
        content={"error": error, "request_id": get_request_id()},
    )


async def app_error_handler(request: Request, exc: Exception) -> JSONResponse:
    """Handle application errors."""
    assert isinstance(exc, AppError)
    if exc.status_code >= 500:
        logger.error("%s: %s", exc.code, exc.message)
    return create_error_response(exc.payload(), exc.status_code)


async def validation_error_handler(request: Request, exc: Exception) -> JSONResponse:
    """Handle request body validation errors."""
    assert isinstance(exc, RequestValidationError)
    errors = [
        {"field": ".".join(str(x) for x in error["loc"]), "message": error["msg"]}
        for error in exc.errors()
    ]
    return create_error_response(
        {"code": "VALIDATION_ERROR", "message": "Request validation failed", "details": {"errors": errors}},
        422,
    )


async def generic_error_handler(request: Request, exc: Exception) -> JSONResponse:
    logger.exception("Unhandled error on %s", request.url.path)
    return create_error_response(
        {"code": "INTERNAL_ERROR", "message": "An unexpected error occurred", "details": {}},
        500,
    )
