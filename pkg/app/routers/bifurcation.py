"""Router: POST /v1/sweep, /v1/hopf: parameter sweeps and critical values."""

from __future__ import annotations

import structlog
from fastapi import APIRouter

from app.errors import ModelError
from app.routers.errors import to_http
from app.schemas.bifurcation import CriticalPoint, SweepPoint
from app.schemas.run import HopfRequest, SweepRequest
from app.services.bifurcation import find_hopf, sweep
from app.services.model import resolve_parameters

logger = structlog.get_logger(__name__)

router = APIRouter(prefix="/v1", tags=["bifurcation"])


@router.post("/sweep", response_model=list[SweepPoint])
def sweep_parameter(req: SweepRequest):
    """Feasibility and stability of F1 / F2 on a uniform grid of A or B."""
    try:
        p = resolve_parameters(req, req.A)
        logger.info("sweep_requested", param=req.param.value, lo=req.lo, hi=req.hi, n=req.n)
        return sweep(p, req.param, req.lo, req.hi, req.n)
    except ModelError as exc:
        raise to_http(exc) from exc


@router.post("/hopf", response_model=CriticalPoint)
async def hopf(req: HopfRequest):
    """Bisect for the Hopf value of A; the bracket defaults to the candidate interval."""
    try:
        p = resolve_parameters(req)
        logger.info("hopf_requested", lo=req.lo, hi=req.hi)
        return find_hopf(p, req.lo, req.hi)
    except ModelError as exc:
        raise to_http(exc) from exc
