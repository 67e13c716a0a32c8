"""Router: POST /v1/simulate: integrate and classify the long-run behavior."""

from __future__ import annotations

import structlog
from fastapi import APIRouter

from app.config import settings
from app.errors import ModelError
from app.routers.errors import to_http
from app.schemas.dynamics import SimulationReport
from app.schemas.parameters import StateVector
from app.schemas.run import SimulateRequest
from app.services.dynamics import classify_asymptotics, default_initial_state, integrate, simulation_report
from app.services.model import resolve_parameters

logger = structlog.get_logger(__name__)

router = APIRouter(prefix="/v1", tags=["dynamics"])


@router.post("/simulate", response_model=SimulationReport)
def simulate(req: SimulateRequest):
    """Integrate from ``u0`` (default: F2 perturbed by 1%) and return the verdict
    with a down-sampled trajectory."""
    try:
        p = resolve_parameters(req, req.A)
        u0 = StateVector(X=req.u0[0], Y=req.u0[1], Z=req.u0[2]) if req.u0 else default_initial_state(p)
        logger.info("simulation_requested", A=p.A, t_end=req.t_end or settings.t_end, samples=req.samples)
        tr = integrate(
            p,
            u0,
            t_end=req.t_end or settings.t_end,
            rel_tol=req.rel_tol,
            abs_tol=req.abs_tol,
        )
        return simulation_report(tr, classify_asymptotics(tr), samples=req.samples)
    except ModelError as exc:
        raise to_http(exc) from exc
