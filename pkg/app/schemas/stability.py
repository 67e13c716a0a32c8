"""Schemas for Routh-Hurwitz analysis and the A-axis classification."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from app.schemas.common import A1Case, A2Case, EquilibriumKind, F1Regime, Regime
from app.schemas.equilibria import DerivedQuantities
from app.schemas.parameters import ScaledParameters, StateVector


class CharPolyCoeffs(BaseModel):
    """Coefficients of lambda^3 + a1 lambda^2 + a2 lambda + a3 (a0 = 1)."""

    model_config = ConfigDict(frozen=True)

    a1: float
    a2: float
    a3: float


class HurwitzVerdict(BaseModel):
    """Routh-Hurwitz conditions for a monic cubic, with their signed margins."""

    model_config = ConfigDict(frozen=True)

    a1: float
    a3: float
    margin: float = Field(..., description="a1*a2 - a3")
    a1_positive: bool
    a3_positive: bool
    margin_positive: bool

    @property
    def stable(self) -> bool:
        return self.a1_positive and self.a3_positive and self.margin_positive


class F1Quadratic(BaseModel):
    """lambda^2 + m1 lambda + m0 governing the predator directions at F1."""

    model_config = ConfigDict(frozen=True)

    m1: float
    m0: float
    regime: F1Regime


class Knot(BaseModel):
    """A labeled critical value on the A-axis."""

    model_config = ConfigDict(frozen=True)

    label: str
    value: float


class CandidateInterval(BaseModel):
    """Open A-interval where a1 > 0 and a2 > 0 hold jointly."""

    model_config = ConfigDict(frozen=True)

    lo: float
    hi: float
    lo_label: str
    hi_label: str

    def contains(self, A: float) -> bool:
        return self.lo < A < self.hi


class ClassifierQuantities(BaseModel):
    """K, M, H, the knots and the case labels of the A-classification."""

    model_config = ConfigDict(frozen=True)

    K: float
    M: float
    H: float
    knots: list[Knot]
    regime: Regime
    a1_case: A1Case
    a2_case: A2Case
    a2_subcase: Optional[str] = Field(None, description="Table letter a-d for the Case 2 sign tables")
    arrangement: str = Field(..., description="Ordered knots, candidate interval in brackets")

    @property
    def label(self) -> str:
        return f"{self.regime.value}/{self.a1_case.value}/{self.a2_case.value}"

    def knot(self, label: str) -> Optional[float]:
        for k in self.knots:
            if k.label == label:
                return k.value
        return None


class StabilityReport(BaseModel):
    """Local stability of one equilibrium."""

    model_config = ConfigDict(frozen=True)

    kind: EquilibriumKind
    state: StateVector
    eigenvalues: list[tuple[float, float]] = Field(..., description="[re, im] pairs")
    stable: bool
    coeffs: Optional[CharPolyCoeffs] = None
    hurwitz: Optional[HurwitzVerdict] = None
    f1_quadratic: Optional[F1Quadratic] = None
    classifier: Optional[ClassifierQuantities] = None
    candidate_intervals: list[CandidateInterval] = Field(default_factory=list)

    @property
    def max_real_part(self) -> float:
        return max(re for re, _im in self.eigenvalues)


class ClassificationReport(BaseModel):
    """Everything `classify` emits."""

    model_config = ConfigDict(frozen=True)

    params: ScaledParameters
    derived: DerivedQuantities
    classifier: ClassifierQuantities
    case_label: str
    candidate_intervals: list[CandidateInterval]
    stability: Optional[StabilityReport] = Field(None, description="Present when A is given and F2 is feasible")
