"""Schemas for long-run behavior of integrated trajectories."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from app.schemas.common import VerdictKind
from app.schemas.parameters import ScaledParameters, StateVector


class AsymptoticVerdict(BaseModel):
    """Classified long-run behavior of a trajectory."""

    model_config = ConfigDict(frozen=True)

    kind: VerdictKind
    transient_fraction: float
    state: Optional[StateVector] = Field(None, description="Terminal state (SteadyState)")
    residual: Optional[float] = Field(None, description="Terminal |rhs|_inf")
    mean_state: Optional[StateVector] = Field(None, description="Window mean (LimitCycle)")
    amplitude: Optional[tuple[float, float, float]] = Field(None, description="Peak-to-peak per component")
    period: Optional[float] = Field(None, description="Mean of the trailing inter-peak intervals")
    peaks: int = Field(0, description="X peaks found after the transient")


class SimulationReport(BaseModel):
    """Verdict plus the integration settings that produced it."""

    model_config = ConfigDict(frozen=True)

    params: ScaledParameters
    initial_state: StateVector
    t_end: float
    rel_tol: float
    abs_tol: float
    accepted_steps: int
    rejected_steps: int
    clamped: int
    verdict: AsymptoticVerdict
    samples: list[tuple[float, float, float, float]] = Field(
        default_factory=list, description="Optional (t, X, Y, Z) rows, API only"
    )
