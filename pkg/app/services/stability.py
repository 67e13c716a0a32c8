"""Local stability of F0, F1, F2 and the A-axis classification of F2.

At F2 the characteristic polynomial is lambda^3 + a1 lambda^2 + a2 lambda + a3
with, for S2 = s^2 v + c d^2 w::

    a1 = [V B S2 + rds (ABQ - W)] / (V B Q)
    a2 = rds [B(A - 1) S2 + (A + 1) ds (s + d) + B(wc + v)(W - ds)] / (V B Q)
    a3 = rds W / (B Q)

a1 > 0 iff A > K, and the bracket of a2 equals A M - H, so the signs of K,
M and H decide which A-ranges can host a stable coexistence.
"""

from __future__ import annotations

from typing import Optional

import numpy as np
import structlog

from app.config import settings
from app.errors import DegenerateError, InfeasibleError
from app.schemas.common import A1Case, A2Case, EquilibriumKind, F1Regime, Regime
from app.schemas.stability import (
    CandidateInterval,
    CharPolyCoeffs,
    ClassificationReport,
    ClassifierQuantities,
    F1Quadratic,
    HurwitzVerdict,
    Knot,
    StabilityReport,
)
from app.schemas.parameters import ScaledParameters, StateVector
from app.services.equilibria import coexistence, derived
from app.services.model import jacobian
from app.services.polynomial import as_pairs, char_poly_of, eigenvalues

logger = structlog.get_logger(__name__)

# Knot labels, in the order they are listed when values tie
KNOT_K = "K"
KNOT_ZERO = "0"
KNOT_MERGE = "V/(BQ+ds)"
KNOT_HM = "H/M"
KNOT_ONE = "1"
KNOT_CASE = "(BQ-2ds)/ds"
KNOT_TOP = "V/ds"

_POSITIVE_CASES = {1: A2Case.P1, 2: A2Case.P2, 3: A2Case.P3, 4: A2Case.P4}
_NEGATIVE_CASES = {
    1: A2Case.N1,
    2: A2Case.N2,
    3: A2Case.N3,
    4: A2Case.N4,
    5: A2Case.N5,
    6: A2Case.N6,
    7: A2Case.N7,
}


def _sign(value: float, scale: float = 1.0) -> int:
    """Sign of ``value`` with zero band zero_tol * max(1, |scale|)."""
    tol = settings.zero_tol * max(1.0, abs(scale))
    if value > tol:
        return 1
    if value < -tol:
        return -1
    return 0


def _s2(p: ScaledParameters) -> float:
    return p.s**2 * p.v + p.c * p.d**2 * p.w


# ---------------------------------------------------------------------------
# Routh-Hurwitz
# ---------------------------------------------------------------------------

def char_poly(p: ScaledParameters) -> CharPolyCoeffs:
    """Closed-form coefficients of the characteristic cubic at F2.

    Raises:
        DegenerateError: V = 0 or BQ = 0.
        DomainError: A missing or not positive.
    """
    A = p.require_A()
    q = derived(p)
    BQ = p.B * q.Q
    if abs(q.V) <= settings.zero_tol or BQ <= settings.zero_tol:
        raise DegenerateError(f"characteristic cubic undefined: V = {q.V!r}, BQ = {BQ!r}")

    ds = p.d * p.s
    rds = p.r * ds
    S2 = _s2(p)
    W = q.W
    denom = q.V * BQ

    a1 = (q.V * p.B * S2 + rds * (A * BQ - W)) / denom
    a2 = rds * (
        p.B * (A - 1.0) * S2
        + (A + 1.0) * ds * (p.s + p.d)
        + p.B * (p.w * p.c + p.v) * (W - ds)
    ) / denom
    a3 = rds * W / BQ
    return CharPolyCoeffs(a1=a1, a2=a2, a3=a3)


def routh_hurwitz(coeffs: CharPolyCoeffs) -> HurwitzVerdict:
    """a1 > 0, a3 > 0 and a1 a2 - a3 > 0, with the signed values."""
    margin = coeffs.a1 * coeffs.a2 - coeffs.a3
    return HurwitzVerdict(
        a1=coeffs.a1,
        a3=coeffs.a3,
        margin=margin,
        a1_positive=coeffs.a1 > 0.0,
        a3_positive=coeffs.a3 > 0.0,
        margin_positive=margin > 0.0,
    )


# ---------------------------------------------------------------------------
# Case tables (pure functions of the classifier quantities)
# ---------------------------------------------------------------------------

def regime_of(BQ: float, ds: float) -> Regime:
    return Regime.CASE1 if _sign(BQ - 3.0 * ds, BQ) >= 0 else Regime.CASE2


def classify_a1_case(K: float, v_over_ds: float) -> A1Case:
    """Table letter for the sign of a1 on the A-axis."""
    k_positive = _sign(K) > 0
    wide = _sign(v_over_ds - 1.0, v_over_ds) > 0
    if k_positive:
        return A1Case.D if wide else A1Case.C
    return A1Case.B if wide else A1Case.A


def classify_a2_case(M: float, H: float, regime: Regime) -> A2Case:
    """Sign table of a2 = rds (A M - H) / (V B Q)."""
    sm, sh = _sign(M), _sign(H)
    if sm == 0 and sh == 0:
        return A2Case.DEGENERATE
    if sm > 0 and sh > 0:
        number = 1
    elif sm > 0 and sh == 0:
        number = 2
    elif sm < 0 and sh < 0:
        number = 3
    elif sh < 0:
        number = 4
    elif sm < 0 and sh == 0:
        number = 5
    elif sm < 0:
        number = 6
    else:
        number = 7

    if regime is Regime.CASE1 and number in _POSITIVE_CASES:
        return _POSITIVE_CASES[number]
    return _NEGATIVE_CASES[number]


def classify_a2_subcase(case: A2Case, M: float, H: float, case_knot: float) -> Optional[str]:
    """Letter of the BQ < 3ds sub-table, decided by where (BQ-2ds)/ds, H/M and 1 fall."""
    above_zero = _sign(case_knot) > 0
    if case is A2Case.N1:
        ratio = H / M
        if not above_zero:
            return "a"
        if ratio < case_knot:
            return "b"
        return "c" if ratio < 1.0 else "d"
    if case is A2Case.N2:
        return "a" if above_zero else "b"
    if case is A2Case.N3:
        if above_zero:
            return "b"
        return "a" if H / M < 1.0 else "c"
    if case in (A2Case.N4, A2Case.N7):
        return "a" if above_zero else "b"
    return None


def admissible_interval(K: float, M: float, H: float, v_over_ds: float) -> Optional[CandidateInterval]:
    """The open A-range inside (0, V/ds) where a1 > 0 and a2 > 0 both hold.

    a1 > 0 iff A > K. a2 > 0 iff A > H/M (M > 0), A < H/M (M < 0), or H < 0 (M = 0).
    """
    sm, sh = _sign(M), _sign(H)
    if sm == 0 and sh >= 0:
        return None

    lo, lo_label = 0.0, KNOT_ZERO
    hi, hi_label = v_over_ds, KNOT_TOP
    if K > lo:
        lo, lo_label = K, KNOT_K
    if sm > 0 and H / M > lo:
        lo, lo_label = H / M, KNOT_HM
    if sm < 0 and H / M < hi:
        hi, hi_label = H / M, KNOT_HM

    if not lo < hi:
        return None
    return CandidateInterval(lo=lo, hi=hi, lo_label=lo_label, hi_label=hi_label)


def arrangement(knots: list[Knot], interval: Optional[CandidateInterval]) -> str:
    """Render the ordered knots, bracketing the candidate interval."""
    parts = []
    for knot in knots:
        text = knot.label
        if interval is not None and knot.label == interval.lo_label:
            text = "[" + text
        if interval is not None and knot.label == interval.hi_label:
            text = text + "]"
        parts.append(text)
    return " < ".join(parts)


def classifier_quantities(p: ScaledParameters) -> ClassifierQuantities:
    """K, M, H, the ordered knots and the case labels (independent of A).

    Raises:
        DegenerateError: V <= 0, or rds = 0.
    """
    q = derived(p)
    ds = p.d * p.s
    rds = p.r * ds
    if q.V <= settings.zero_tol:
        raise DegenerateError(f"classification needs V > 0, got V = {q.V!r}")
    if rds <= settings.zero_tol:
        raise DegenerateError("classification needs r, d, s > 0")

    BQ = p.B * q.Q
    S2 = _s2(p)
    hunting = p.w * p.c + p.v

    K = q.V / (BQ + ds) * (rds - p.B * S2) / rds
    M = p.B * S2 + ds * ((p.s + p.d) - p.B * hunting)
    H = p.B * S2 + p.B * hunting * (2.0 * ds - BQ) - (p.s + p.d) * ds
    v_over_ds = q.V / ds
    case_knot = (BQ - 2.0 * ds) / ds

    knots = [
        Knot(label=KNOT_K, value=K),
        Knot(label=KNOT_ZERO, value=0.0),
        Knot(label=KNOT_MERGE, value=q.V / (BQ + ds)),
    ]
    if _sign(M) != 0:
        knots.append(Knot(label=KNOT_HM, value=H / M))
    knots += [
        Knot(label=KNOT_ONE, value=1.0),
        Knot(label=KNOT_CASE, value=case_knot),
        Knot(label=KNOT_TOP, value=v_over_ds),
    ]
    knots.sort(key=lambda k: k.value)

    regime = regime_of(BQ, ds)
    a2_case = classify_a2_case(M, H, regime)
    interval = None if a2_case is A2Case.DEGENERATE else admissible_interval(K, M, H, v_over_ds)

    return ClassifierQuantities(
        K=K,
        M=M,
        H=H,
        knots=knots,
        regime=regime,
        a1_case=classify_a1_case(K, v_over_ds),
        a2_case=a2_case,
        a2_subcase=classify_a2_subcase(a2_case, M, H, case_knot) if regime is Regime.CASE2 else None,
        arrangement=arrangement(knots, interval),
    )


def candidate_intervals(p: ScaledParameters) -> list[CandidateInterval]:
    """Open A-intervals where a1 > 0 and a2 > 0; empty when stability cannot occur."""
    cq = classifier_quantities(p)
    if cq.a2_case is A2Case.DEGENERATE:
        return []
    interval = admissible_interval(cq.K, cq.M, cq.H, cq.knot(KNOT_TOP))
    return [] if interval is None else [interval]


# ---------------------------------------------------------------------------
# Per-equilibrium reports
# ---------------------------------------------------------------------------

def f0_stability(p: ScaledParameters) -> StabilityReport:
    """The origin has eigenvalues r, -s, -d."""
    eigs = sorted([(p.r, 0.0), (-p.s, 0.0), (-p.d, 0.0)], reverse=True)
    return StabilityReport(
        kind=EquilibriumKind.ORIGIN,
        state=StateVector(X=0.0, Y=0.0, Z=0.0),
        eigenvalues=eigs,
        stable=max(re for re, _ in eigs) < 0.0,
    )


def f1_quadratic(p: ScaledParameters) -> F1Quadratic:
    """lambda^2 + m1 lambda + m0 of the predator directions at F1 = (1, 0, 0)."""
    A = p.require_A()
    W = derived(p).W
    m1 = ((p.s + p.d) * (A + 1.0) - p.B * (p.w * p.c + p.v)) / (A + 1.0)
    m0 = -W / (A + 1.0)
    if _sign(m1) < 0:
        regime = F1Regime.M1_NEGATIVE
    elif _sign(m0) <= 0:
        regime = F1Regime.M0_NEGATIVE
    else:
        regime = F1Regime.STABLE
    return F1Quadratic(m1=m1, m0=m0, regime=regime)


def f1_stability(p: ScaledParameters) -> StabilityReport:
    """F1 is stable iff A + 1 > BQ/(ds), i.e. m0 > 0 (which forces m1 > 0)."""
    quad = f1_quadratic(p)
    pair = np.roots([1.0, quad.m1, quad.m0]).astype(complex)
    eigs = [(-p.r, 0.0)] + [(float(lam.real), float(lam.imag)) for lam in pair]
    eigs.sort(key=lambda e: (-e[0], -e[1]))
    stable = p.r > 0.0 and _sign(quad.m1) > 0 and _sign(quad.m0) > 0
    return StabilityReport(
        kind=EquilibriumKind.PREY_ONLY,
        state=StateVector(X=1.0, Y=0.0, Z=0.0),
        eigenvalues=eigs,
        stable=stable,
        f1_quadratic=quad,
    )


def coexistence_stability(p: ScaledParameters) -> StabilityReport:
    """Routh-Hurwitz verdict at F2, cross-checked against its eigenvalues.

    Raises:
        InfeasibleError: F2 is not feasible.
        DegenerateError: V = 0.
    """
    f2 = coexistence(p)
    if not f2.feasible:
        raise InfeasibleError(f"coexistence equilibrium infeasible at A = {p.A!r}")

    J = jacobian(p, f2.state)
    eigs = eigenvalues(J)
    coeffs = char_poly(p)
    verdict = routh_hurwitz(coeffs)

    from_jacobian = np.array(char_poly_of(J))
    closed = np.array([coeffs.a1, coeffs.a2, coeffs.a3])
    drift = float(np.max(np.abs(from_jacobian - closed)))
    if drift > 1e-9 * max(1.0, float(np.max(np.abs(closed)))):
        logger.warning("char_poly_mismatch", drift=drift, A=p.A)

    eigen_stable = float(np.max(eigs.real)) < 0.0
    if eigen_stable != verdict.stable and abs(verdict.margin) > 1e-9:
        logger.warning(
            "hurwitz_eigen_mismatch",
            A=p.A,
            margin=verdict.margin,
            max_re=float(np.max(eigs.real)),
        )

    cq = classifier_quantities(p)
    return StabilityReport(
        kind=EquilibriumKind.COEXISTENCE,
        state=f2.state,
        eigenvalues=as_pairs(eigs),
        stable=verdict.stable,
        coeffs=coeffs,
        hurwitz=verdict,
        classifier=cq,
        candidate_intervals=candidate_intervals(p),
    )


def classify(p: ScaledParameters) -> ClassificationReport:
    """Classifier quantities and candidate intervals, plus F2 stability when A is given."""
    cq = classifier_quantities(p)
    intervals = candidate_intervals(p)

    stability = None
    if p.A is not None:
        p.require_A()
        if coexistence(p).feasible:
            stability = coexistence_stability(p)

    logger.info(
        "classification_computed",
        case=cq.label,
        subcase=cq.a2_subcase,
        intervals=[(i.lo, i.hi) for i in intervals],
    )
    return ClassificationReport(
        params=p,
        derived=derived(p),
        classifier=cq,
        case_label=cq.label,
        candidate_intervals=intervals,
        stability=stability,
    )
