"""Router: POST /v1/equilibria, /v1/classify: closed-form analysis of F0, F1, F2."""

from __future__ import annotations

import structlog
from fastapi import APIRouter

from app.errors import ModelError
from app.routers.errors import to_http
from app.schemas.equilibria import EquilibriaReport
from app.schemas.run import AnalysisRequest
from app.schemas.stability import ClassificationReport
from app.services.equilibria import equilibria_report
from app.services.model import resolve_parameters
from app.services.stability import classify

logger = structlog.get_logger(__name__)

router = APIRouter(prefix="/v1", tags=["analysis"])


@router.post("/equilibria", response_model=EquilibriaReport)
async def equilibria(req: AnalysisRequest):
    """Equilibria F0, F1, F2 with feasibility, Q, V, W and the transcritical thresholds."""
    try:
        p = resolve_parameters(req, req.A)
        logger.info("equilibria_requested", source="raw" if req.raw else "scaled", A=p.A)
        return equilibria_report(p)
    except ModelError as exc:
        raise to_http(exc) from exc


@router.post("/classify", response_model=ClassificationReport)
async def classify_parameters(req: AnalysisRequest):
    """K, M, H, knots, case label and candidate A-intervals.

    The F2 stability report is included when A is known and F2 is feasible.
    """
    try:
        p = resolve_parameters(req, req.A)
        logger.info("classification_requested", source="raw" if req.raw else "scaled", A=p.A)
        return classify(p)
    except ModelError as exc:
        raise to_http(exc) from exc
