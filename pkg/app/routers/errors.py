"""Translation of model errors to HTTP errors."""

from __future__ import annotations

import structlog
from fastapi import HTTPException

from app.errors import ConfigError, IntegrationError, ModelError

logger = structlog.get_logger(__name__)


def to_http(exc: ModelError) -> HTTPException:
    """400 for bad input files, 500 for integrator failures, 422 otherwise."""
    if isinstance(exc, ConfigError):
        status = 400
    elif isinstance(exc, IntegrationError):
        status = 500
    else:
        status = 422
    logger.warning("request_failed", error=type(exc).__name__, detail=str(exc), status=status)
    return HTTPException(status_code=status, detail={"error": type(exc).__name__, "message": str(exc)})
