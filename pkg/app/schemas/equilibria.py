"""Schemas for equilibria and their derived quantities."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from app.schemas.common import EquilibriumKind
from app.schemas.parameters import ScaledParameters, StateVector


class DerivedQuantities(BaseModel):
    """Q = sv + cdw, V = BQ - ds, W = BQ - ds(A + 1) = V - dsA."""

    model_config = ConfigDict(frozen=True)

    Q: float
    V: float
    W: Optional[float] = Field(None, description="Absent when A is not given")


class Equilibrium(BaseModel):
    """One of the three equilibria with its feasibility verdict."""

    model_config = ConfigDict(frozen=True)

    kind: EquilibriumKind
    state: Optional[StateVector] = Field(
        None, description="Closed-form state; formal (possibly negative) values when infeasible"
    )
    feasible: bool
    boundary: bool = Field(False, description="True iff |W| is within the boundary tolerance")


class EquilibriaReport(BaseModel):
    """Everything `equilibria` emits."""

    model_config = ConfigDict(frozen=True)

    params: ScaledParameters
    derived: DerivedQuantities
    equilibria: list[Equilibrium]
    transcritical_B: Optional[float] = Field(None, description="B at which W = 0; absent when Q = 0")
    transcritical_A: Optional[float] = Field(None, description="A at which W = 0; absent when V <= 0")
    max_residual: Optional[float] = Field(
        None, description="|rhs|_inf at the coexistence state when it is reported"
    )
