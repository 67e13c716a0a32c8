"""Schemas for one-parameter sweeps and critical points."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from app.schemas.common import CriticalKind, SweepParameter


class SweepPoint(BaseModel):
    """Feasibility and stability of F1 / F2 at one parameter value."""

    model_config = ConfigDict(frozen=True)

    param: SweepParameter
    value: float
    feasible: bool
    boundary: bool = False
    max_re_lambda: Optional[float] = None
    a1: Optional[float] = None
    a3: Optional[float] = None
    hurwitz_margin: Optional[float] = None
    f1_stable: bool


class CriticalPoint(BaseModel):
    """A located transcritical or Hopf value."""

    model_config = ConfigDict(frozen=True)

    kind: CriticalKind
    param: SweepParameter
    value: float
    bracket: tuple[float, float]
    residual: float = Field(..., description="|W| (transcritical) or |a1 a2 - a3| (Hopf)")
    eigenvalues: list[tuple[float, float]] = Field(
        default_factory=list, description="Eigenvalues of F2 at the critical value, [re, im] pairs"
    )
    iterations: int = 0
