"""Schemas for run configuration files and HTTP request bodies."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from app.schemas.common import OutputFormat, SweepParameter
from app.schemas.parameters import ParameterBlock


class RunOptions(BaseModel):
    """Command options; every field may also be given on the command line."""

    A: Optional[float] = Field(None, gt=0.0, description="Override of the scaled half-saturation")
    t_end: Optional[float] = Field(None, gt=0.0)
    rel_tol: Optional[float] = Field(None, gt=0.0)
    abs_tol: Optional[float] = Field(None, gt=0.0)
    u0: Optional[tuple[float, float, float]] = None
    dimensional: bool = False
    param: Optional[SweepParameter] = None
    lo: Optional[float] = None
    hi: Optional[float] = None
    n: Optional[int] = Field(None, ge=2)

    @model_validator(mode="after")
    def _ordered_range(self) -> "RunOptions":
        if self.lo is not None and self.hi is not None and not self.lo < self.hi:
            raise ValueError(f"range must satisfy lo < hi, got ({self.lo}, {self.hi})")
        if self.u0 is not None and min(self.u0) < 0.0:
            raise ValueError("initial state must be nonnegative")
        return self


class ConfigFile(ParameterBlock):
    """On-disk parameter file: one parameter block plus optional options."""

    description: Optional[str] = None
    options: RunOptions = Field(default_factory=RunOptions)


class RunConfig(BaseModel):
    """Fully resolved CLI invocation."""

    command: str
    parameters: ParameterBlock
    options: RunOptions
    out: Optional[Path] = None
    format: OutputFormat = OutputFormat.JSON


# ---------------------------------------------------------------------------
# HTTP request bodies
# ---------------------------------------------------------------------------

class AnalysisRequest(ParameterBlock):
    """Parameter block plus optional A override."""

    A: Optional[float] = Field(None, gt=0.0)


class SimulateRequest(AnalysisRequest):
    t_end: Optional[float] = Field(None, gt=0.0)
    rel_tol: Optional[float] = Field(None, gt=0.0)
    abs_tol: Optional[float] = Field(None, gt=0.0)
    u0: Optional[tuple[float, float, float]] = None
    samples: int = Field(512, ge=0, le=8192, description="Trajectory rows returned (down-sampled)")


class SweepRequest(AnalysisRequest):
    param: SweepParameter
    lo: float = Field(..., gt=0.0)
    hi: float = Field(..., gt=0.0)
    n: int = Field(..., ge=2, le=100_000)


class HopfRequest(AnalysisRequest):
    lo: Optional[float] = Field(None, gt=0.0)
    hi: Optional[float] = Field(None, gt=0.0)
