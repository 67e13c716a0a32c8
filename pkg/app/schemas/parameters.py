"""Schemas for model parameters and population states."""

from __future__ import annotations

from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.errors import DomainError

# p + q = 1 is checked to this absolute tolerance
FRACTION_SUM_TOL = 1e-12


def _nonneg(description: str):
    return Field(..., ge=0.0, allow_inf_nan=False, description=description)


class RawParameters(BaseModel):
    """Dimensional constants of the predator-prey model with two predator genotypes."""

    model_config = ConfigDict(frozen=True)

    R: float = _nonneg("Prey growth rate (1/time)")
    Ktilde: float = _nonneg("Prey carrying capacity (biomass)")
    h: float = _nonneg("Hunting coefficient of genotype y")
    g: float = _nonneg("Hunting coefficient of genotype z")
    xi: float = _nonneg("Maximum resource per prey per unit time")
    mu: float = _nonneg("Half-saturation constant (biomass)")
    p: float = _nonneg("Fraction of newborns of genotype y")
    q: float = _nonneg("Fraction of newborns of genotype z")
    e: float = Field(..., ge=0.0, lt=1.0, allow_inf_nan=False, description="Conversion factor, e < 1")
    m: float = _nonneg("Mortality of genotype y (1/time)")
    n: float = _nonneg("Mortality of genotype z (1/time)")

    @model_validator(mode="after")
    def _fractions_sum_to_one(self) -> "RawParameters":
        if abs(self.p + self.q - 1.0) > FRACTION_SUM_TOL:
            raise ValueError(f"p + q must equal 1, got {self.p + self.q!r}")
        return self


class ScaledParameters(BaseModel):
    """Nondimensional constants of the rescaled model.

    ``A`` may be left out for analyses that do not depend on it (the
    A-classification and its candidate intervals); every A-dependent
    operation calls :meth:`require_A`.
    """

    model_config = ConfigDict(frozen=True)

    r: float = _nonneg("Scaled prey growth rate R/e")
    c: float = _nonneg("Relative hunting efficiency h/g")
    w: float = _nonneg("Genotype-y recruitment p g Ktilde")
    s: float = _nonneg("Scaled mortality of y, m/e")
    v: float = _nonneg("Genotype-z recruitment q g Ktilde")
    d: float = _nonneg("Scaled mortality of z, n/e")
    B: float = _nonneg("Scaled maximum resource xi/Ktilde")
    A: Optional[float] = Field(
        None, ge=0.0, allow_inf_nan=False, description="Scaled half-saturation mu/Ktilde"
    )

    def require_A(self) -> float:
        """Return A, rejecting a missing or non-positive value."""
        if self.A is None or self.A <= 0.0:
            raise DomainError(f"half-saturation A must be > 0, got {self.A!r}")
        return self.A

    def with_A(self, value: float | None) -> "ScaledParameters":
        return type(self).model_validate({**self.model_dump(), "A": value})

    def with_B(self, value: float) -> "ScaledParameters":
        return type(self).model_validate({**self.model_dump(), "B": value})


class StateVector(BaseModel):
    """Nondimensional population densities (prey X, predator genotypes Y and Z).

    Negative components are representable: infeasible equilibria report
    their formal values.
    """

    model_config = ConfigDict(frozen=True)

    X: float = Field(..., allow_inf_nan=False)
    Y: float = Field(..., allow_inf_nan=False)
    Z: float = Field(..., allow_inf_nan=False)

    @classmethod
    def from_array(cls, values) -> "StateVector":
        x, y, z = (float(v) for v in values)
        return cls(X=x, Y=y, Z=z)

    def as_array(self) -> np.ndarray:
        return np.array([self.X, self.Y, self.Z], dtype=float)

    @property
    def is_admissible(self) -> bool:
        return self.X >= 0.0 and self.Y >= 0.0 and self.Z >= 0.0


class ParameterBlock(BaseModel):
    """Parameter file payload: exactly one of ``raw`` or ``scaled``."""

    raw: Optional[RawParameters] = None
    scaled: Optional[ScaledParameters] = None

    @model_validator(mode="after")
    def _exactly_one_block(self) -> "ParameterBlock":
        if (self.raw is None) == (self.scaled is None):
            raise ValueError("exactly one of 'raw' or 'scaled' must be present")
        return self
