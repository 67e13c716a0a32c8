"""One-parameter sweeps and location of transcritical and Hopf critical values."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np
import structlog
from scipy.optimize import bisect

from app.config import settings
from app.errors import DegenerateError, DomainError, NoSignChangeError
from app.schemas.bifurcation import CriticalPoint, SweepPoint
from app.schemas.common import CriticalKind, SweepParameter
from app.schemas.parameters import ScaledParameters
from app.services.equilibria import coexistence, derived, transcritical_A, transcritical_B
from app.services.model import jacobian
from app.services.polynomial import as_pairs, eigenvalues
from app.services.stability import candidate_intervals, char_poly, f1_stability, routh_hurwitz

logger = structlog.get_logger(__name__)

# Certificate thresholds for the pure-imaginary pair at a Hopf point
HOPF_MAX_REAL = 1e-7
HOPF_MIN_IMAG = 1e-6
# brackets taken from a candidate interval are pulled inside by this fraction of its width
BRACKET_INSET = 1e-6


def _with_param(p: ScaledParameters, param: SweepParameter, value: float) -> ScaledParameters:
    if param is SweepParameter.A:
        return p.with_A(value)
    return p.with_B(value)


def _sweep_point(p: ScaledParameters, param: SweepParameter, value: float) -> SweepPoint:
    q = _with_param(p, param, value)
    f1_stable = f1_stability(q).stable
    try:
        f2 = coexistence(q)
    except DegenerateError:
        f2 = None

    if f2 is None or not f2.feasible:
        return SweepPoint(param=param, value=value, feasible=False, f1_stable=f1_stable)

    verdict = routh_hurwitz(char_poly(q))
    eigs = eigenvalues(jacobian(q, f2.state))
    return SweepPoint(
        param=param,
        value=value,
        feasible=True,
        boundary=f2.boundary,
        max_re_lambda=float(np.max(eigs.real)),
        a1=verdict.a1,
        a3=verdict.a3,
        hurwitz_margin=verdict.margin,
        f1_stable=f1_stable,
    )


def sweep(
    p: ScaledParameters,
    param: SweepParameter,
    lo: float,
    hi: float,
    n: int,
    workers: Optional[int] = None,
) -> list[SweepPoint]:
    """Evaluate F1 / F2 stability at ``n`` uniformly spaced values of A or B.

    Points where F2 is infeasible are reported with ``feasible=False``.
    Results are ordered by parameter value.

    Raises:
        DomainError: Range not satisfying 0 < lo < hi, or n < 2.
    """
    if not 0.0 < lo < hi:
        raise DomainError(f"sweep range must satisfy 0 < lo < hi, got ({lo!r}, {hi!r})")
    if n < 2:
        raise DomainError(f"sweep needs n >= 2, got {n!r}")
    if param is SweepParameter.B:
        p.require_A()

    values = [float(v) for v in np.linspace(lo, hi, n)]
    workers = workers if workers is not None else settings.sweep_workers

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(lambda v: _sweep_point(p, param, v), values))
    else:
        points = [_sweep_point(p, param, v) for v in values]

    logger.info(
        "sweep_complete",
        param=param.value,
        lo=lo,
        hi=hi,
        n=n,
        feasible=sum(pt.feasible for pt in points),
    )
    return points


def find_transcritical(p: ScaledParameters, param: SweepParameter) -> CriticalPoint:
    """Closed-form value of A or B where W = 0 and F2 leaves F1.

    Raises:
        DegenerateError: Q = 0, or V <= 0 for the A threshold.
    """
    if param is SweepParameter.B:
        value = transcritical_B(p)
    else:
        value = transcritical_A(p)
    q = _with_param(p, param, value)
    residual = abs(derived(q).W)
    f2 = coexistence(q)
    eigs = eigenvalues(jacobian(q, f2.state))

    logger.info("transcritical_located", param=param.value, value=value, residual=residual)
    return CriticalPoint(
        kind=CriticalKind.TRANSCRITICAL,
        param=param,
        value=value,
        bracket=(value, value),
        residual=residual,
        eigenvalues=as_pairs(eigs),
    )


def hurwitz_margin(p: ScaledParameters, A: float) -> float:
    """a1 a2 - a3 at F2 for half-saturation A."""
    c = char_poly(p.with_A(A))
    return c.a1 * c.a2 - c.a3


def find_hopf(
    p: ScaledParameters,
    lo: Optional[float] = None,
    hi: Optional[float] = None,
    xtol: Optional[float] = None,
) -> CriticalPoint:
    """Bisect on a1 a2 - a3 for the A where a conjugate pair crosses the imaginary axis.

    Without a bracket the candidate interval of the A-classification is used.
    The upper end is clipped to V/(ds), where F2 meets F1.

    Raises:
        DomainError: No bracket available, bracket unordered, or a1 <= 0 at its lower end.
        NoSignChangeError: The margin has the same sign at both ends.
        DegenerateError: V <= 0, the crossing pair is real, or it misses the imaginary axis.
    """
    xtol = xtol if xtol is not None else settings.hopf_xtol
    if lo is None or hi is None:
        intervals = candidate_intervals(p)
        if not intervals:
            raise DomainError("no candidate interval to bracket a Hopf point")
        interval = intervals[0]
        inset = BRACKET_INSET * (interval.hi - interval.lo)
        lo = interval.lo + inset if lo is None else lo
        hi = interval.hi - inset if hi is None else hi
    if not 0.0 < lo < hi:
        raise DomainError(f"Hopf bracket must satisfy 0 < lo < hi, got ({lo!r}, {hi!r})")

    top = transcritical_A(p)
    if hi > top:
        logger.info("hopf_bracket_clipped", hi=hi, clipped_to=top)
        hi = top
        if not lo < hi:
            raise DomainError(f"Hopf bracket lies beyond V/ds = {top!r}")

    if char_poly(p.with_A(lo)).a1 <= 0.0:
        raise DomainError(f"a1 <= 0 at the lower bracket end A = {lo!r}")

    f_lo = hurwitz_margin(p, lo)
    f_hi = hurwitz_margin(p, hi)
    if f_lo * f_hi > 0.0:
        raise NoSignChangeError(
            f"a1 a2 - a3 has the same sign at A = {lo!r} ({f_lo!r}) and A = {hi!r} ({f_hi!r})"
        )

    if f_lo == 0.0:
        root, iterations = lo, 0
    elif f_hi == 0.0:
        root, iterations = hi, 0
    else:
        root, result = bisect(lambda a: hurwitz_margin(p, a), lo, hi, xtol=xtol, full_output=True)
        iterations = result.iterations

    q = p.with_A(root)
    coeffs = char_poly(q)
    residual = abs(coeffs.a1 * coeffs.a2 - coeffs.a3)
    if coeffs.a2 <= 0.0:
        raise DegenerateError(f"real pair at the crossing: a2 = {coeffs.a2!r}")

    eigs = eigenvalues(jacobian(q, coexistence(q).state))
    pair = eigs[np.abs(eigs.imag) > HOPF_MIN_IMAG]
    if pair.size == 0:
        raise DegenerateError(f"no complex pair at the crossing A = {root!r}")
    off_axis = float(np.max(np.abs(pair.real)))
    if off_axis >= HOPF_MAX_REAL:
        logger.warning("hopf_pair_off_axis", A=root, real_part=off_axis)
        raise DegenerateError(f"pair at A = {root!r} has real part {off_axis!r}, not on the imaginary axis")

    logger.info(
        "hopf_located",
        A=root,
        residual=residual,
        frequency=float(np.sqrt(coeffs.a2)),
        iterations=iterations,
    )
    return CriticalPoint(
        kind=CriticalKind.HOPF,
        param=SweepParameter.A,
        value=float(root),
        bracket=(lo, hi),
        residual=residual,
        eigenvalues=as_pairs(eigs),
        iterations=iterations,
    )
