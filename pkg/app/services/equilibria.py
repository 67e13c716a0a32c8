"""Closed-form equilibria F0, F1, F2 and the transcritical threshold."""

from __future__ import annotations

import structlog

from app.config import settings
from app.errors import DegenerateError
from app.schemas.common import EquilibriumKind
from app.schemas.equilibria import DerivedQuantities, EquilibriaReport, Equilibrium
from app.schemas.parameters import ScaledParameters, StateVector
from app.services.model import rhs_scaled

logger = structlog.get_logger(__name__)


def derived(p: ScaledParameters) -> DerivedQuantities:
    """Q = sv + cdw, V = BQ - ds and, when A is known, W = BQ - ds(A + 1)."""
    Q = p.s * p.v + p.c * p.d * p.w
    V = p.B * Q - p.d * p.s
    W = None if p.A is None else p.B * Q - p.d * p.s * (p.A + 1.0)
    return DerivedQuantities(Q=Q, V=V, W=W)


def origin() -> Equilibrium:
    return Equilibrium(kind=EquilibriumKind.ORIGIN, state=StateVector(X=0.0, Y=0.0, Z=0.0), feasible=True)


def prey_only() -> Equilibrium:
    return Equilibrium(kind=EquilibriumKind.PREY_ONLY, state=StateVector(X=1.0, Y=0.0, Z=0.0), feasible=True)


def coexistence(p: ScaledParameters) -> Equilibrium:
    """Coexistence equilibrium F2 = (Ads/V, wAdrW/V^2, vAsrW/V^2).

    Feasible iff V > 0 and W >= 0. On the transcritical boundary
    (|W| <= boundary_tol) the predator components are reported as exact zeros.

    Raises:
        DegenerateError: V = 0.
        DomainError: A missing or not positive.
    """
    A = p.require_A()
    q = derived(p)
    V, W = q.V, q.W
    if abs(V) <= settings.zero_tol:
        raise DegenerateError("V = BQ - ds vanishes: coexistence formulas are singular")

    boundary = abs(W) <= settings.boundary_tol
    X = A * p.d * p.s / V
    if boundary:
        Y = Z = 0.0
    else:
        Y = p.w * A * p.d * p.r * W / V**2
        Z = p.v * A * p.s * p.r * W / V**2
    feasible = V > 0.0 and (W >= 0.0 or boundary)

    return Equilibrium(
        kind=EquilibriumKind.COEXISTENCE,
        state=StateVector(X=X, Y=Y, Z=Z),
        feasible=feasible,
        boundary=boundary,
    )


def all_equilibria(p: ScaledParameters) -> list[Equilibrium]:
    """F0, F1, F2 in that order."""
    return [origin(), prey_only(), coexistence(p)]


def transcritical_B(p: ScaledParameters) -> float:
    """B at which W = 0, i.e. ds(A + 1)/Q. The B field of ``p`` is ignored."""
    A = p.require_A()
    Q = derived(p).Q
    if Q <= settings.zero_tol:
        raise DegenerateError("Q = sv + cdw vanishes: no transcritical value in B")
    return p.d * p.s * (A + 1.0) / Q


def transcritical_A(p: ScaledParameters) -> float:
    """A at which W = 0, i.e. V/(ds). The A field of ``p`` is ignored."""
    q = derived(p)
    ds = p.d * p.s
    if ds <= settings.zero_tol:
        raise DegenerateError("ds vanishes: transcritical value in A undefined")
    if q.Q <= settings.zero_tol or q.V <= 0.0:
        raise DegenerateError(f"no transcritical value in A: V = {q.V!r}")
    return q.V / ds


def equilibria_report(p: ScaledParameters) -> EquilibriaReport:
    """All three equilibria with the derived quantities and both thresholds."""
    equilibria = all_equilibria(p)
    f2 = equilibria[-1]
    q = derived(p)

    try:
        b_dagger = transcritical_B(p)
    except DegenerateError:
        b_dagger = None
    try:
        a_dagger = transcritical_A(p)
    except DegenerateError:
        a_dagger = None

    residual = None
    if f2.feasible:
        residual = float(max(abs(val) for val in rhs_scaled(p, f2.state).as_array()))

    logger.info(
        "equilibria_computed",
        V=q.V,
        W=q.W,
        feasible=f2.feasible,
        boundary=f2.boundary,
        residual=residual,
    )
    return EquilibriaReport(
        params=p,
        derived=q,
        equilibria=equilibria,
        transcritical_B=b_dagger,
        transcritical_A=a_dagger,
        max_residual=residual,
    )
