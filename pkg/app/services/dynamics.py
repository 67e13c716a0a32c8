"""Forward integration of the scaled model and classification of its long-run behavior."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np
import structlog
from scipy.signal import find_peaks

from app.config import settings
from app.errors import DegenerateError, DomainError, InsufficientSpanError
from app.schemas.common import VerdictKind
from app.schemas.dynamics import AsymptoticVerdict, SimulationReport
from app.schemas.parameters import RawParameters, ScaledParameters, StateVector
from app.services import integrator
from app.services.equilibria import coexistence
from app.services.model import unscale_state, unscale_time, vector_field

logger = structlog.get_logger(__name__)

TRAJECTORY_HEADER = ("t", "X", "Y", "Z")
DIMENSIONAL_HEADER = ("tau", "x", "y", "z")

# initial state used when F2 is not available
FALLBACK_INITIAL_STATE = (0.5, 0.1, 0.1)
PERTURBATION = 1.01


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled solution of the scaled model. Arrays are read-only."""

    times: np.ndarray
    states: np.ndarray
    params: ScaledParameters
    rel_tol: float
    abs_tol: float
    accepted_steps: int
    rejected_steps: int
    clamped: int

    @property
    def t_end(self) -> float:
        return float(self.times[-1])

    @property
    def initial_state(self) -> StateVector:
        return StateVector.from_array(self.states[0])

    @property
    def final_state(self) -> StateVector:
        return StateVector.from_array(self.states[-1])


def default_initial_state(p: ScaledParameters) -> StateVector:
    """F2 scaled by 1.01 when it is strictly feasible, otherwise (0.5, 0.1, 0.1)."""
    try:
        f2 = coexistence(p)
    except DegenerateError:
        f2 = None
    if f2 is not None and f2.feasible and not f2.boundary:
        return StateVector.from_array(f2.state.as_array() * PERTURBATION)
    X, Y, Z = FALLBACK_INITIAL_STATE
    return StateVector(X=X, Y=Y, Z=Z)


def integrate(
    p: ScaledParameters,
    u0: StateVector,
    t_end: float,
    rel_tol: Optional[float] = None,
    abs_tol: Optional[float] = None,
    output_intervals: Optional[int] = None,
    max_steps: Optional[int] = None,
) -> Trajectory:
    """Adaptive RK45 solution of the scaled model on [0, t_end].

    Raises:
        DomainError: Negative initial state, non-positive horizon or tolerances, A missing.
        IntegrationError: Step size underflow or step budget exhausted.
    """
    rel_tol = rel_tol if rel_tol is not None else settings.rel_tol
    abs_tol = abs_tol if abs_tol is not None else settings.abs_tol
    output_intervals = output_intervals if output_intervals is not None else settings.output_intervals
    max_steps = max_steps if max_steps is not None else settings.max_steps

    if not u0.is_admissible:
        raise DomainError(f"initial state must be nonnegative, got {u0.as_array().tolist()}")
    if not t_end > 0.0:
        raise DomainError(f"t_end must be > 0, got {t_end!r}")
    if not (rel_tol > 0.0 and abs_tol > 0.0):
        raise DomainError("tolerances must be > 0")

    field = vector_field(p)
    solution = integrator.solve(
        field,
        u0.as_array(),
        t_end=t_end,
        rel_tol=rel_tol,
        abs_tol=abs_tol,
        output_intervals=output_intervals,
        max_steps=max_steps,
    )
    logger.info(
        "integration_complete",
        A=p.A,
        t_end=t_end,
        accepted=solution.accepted_steps,
        rejected=solution.rejected_steps,
    )
    return Trajectory(
        times=solution.times,
        states=solution.states,
        params=p,
        rel_tol=rel_tol,
        abs_tol=abs_tol,
        accepted_steps=solution.accepted_steps,
        rejected_steps=solution.rejected_steps,
        clamped=solution.clamped,
    )


def classify_asymptotics(
    tr: Trajectory,
    transient_fraction: Optional[float] = None,
) -> AsymptoticVerdict:
    """Decide between steady state, limit cycle and undecided after the transient.

    Steady state when the terminal residual |rhs|_inf is below
    ``steady_threshold``. Limit cycle when the X peak-to-peak exceeds
    ``amplitude_threshold`` and the trailing ``period_intervals`` inter-peak
    intervals agree within ``period_tolerance`` of their mean.

    Raises:
        InsufficientSpanError: Fewer than ``min_window_points`` samples after the transient.
    """
    fraction = transient_fraction if transient_fraction is not None else settings.transient_fraction
    start = int(np.floor(fraction * tr.times.size))
    times = tr.times[start:]
    window = tr.states[start:]
    if times.size < settings.min_window_points:
        raise InsufficientSpanError(
            f"{times.size} samples after the transient, need {settings.min_window_points}"
        )

    terminal = window[-1]
    residual = float(np.max(np.abs(vector_field(tr.params)(terminal))))
    amplitude = np.ptp(window, axis=0)
    amp = (float(amplitude[0]), float(amplitude[1]), float(amplitude[2]))

    if residual < settings.steady_threshold:
        verdict = AsymptoticVerdict(
            kind=VerdictKind.STEADY_STATE,
            transient_fraction=fraction,
            state=StateVector.from_array(terminal),
            residual=residual,
        )
        logger.info("asymptotics_classified", kind=verdict.kind.value, residual=residual)
        return verdict

    X = window[:, 0]
    peaks, _ = find_peaks(X, prominence=0.5 * settings.amplitude_threshold)
    n_intervals = settings.period_intervals
    period = None
    if peaks.size >= n_intervals + 1 and amp[0] > settings.amplitude_threshold:
        intervals = np.diff(times[peaks])[-n_intervals:]
        mean = float(intervals.mean())
        if mean > 0.0 and float(intervals.max() - intervals.min()) <= settings.period_tolerance * mean:
            period = mean

    if period is not None:
        verdict = AsymptoticVerdict(
            kind=VerdictKind.LIMIT_CYCLE,
            transient_fraction=fraction,
            residual=residual,
            mean_state=StateVector.from_array(window.mean(axis=0)),
            amplitude=amp,
            period=period,
            peaks=int(peaks.size),
        )
    else:
        verdict = AsymptoticVerdict(
            kind=VerdictKind.UNDECIDED,
            transient_fraction=fraction,
            state=StateVector.from_array(terminal),
            residual=residual,
            amplitude=amp,
            peaks=int(peaks.size),
        )
    logger.info(
        "asymptotics_classified",
        kind=verdict.kind.value,
        residual=residual,
        peaks=verdict.peaks,
        period=verdict.period,
    )
    return verdict


def trajectory_rows(
    tr: Trajectory,
    dimensional: bool = False,
    raw: Optional[RawParameters] = None,
) -> Iterator[tuple[float, float, float, float]]:
    """Yield (t, X, Y, Z) rows, or (tau, x, y, z) when ``dimensional`` is set."""
    if not dimensional:
        for t, state in zip(tr.times, tr.states):
            yield (float(t), float(state[0]), float(state[1]), float(state[2]))
        return

    if raw is None:
        raise DomainError("dimensional output needs the raw parameter block")
    for t, state in zip(tr.times, tr.states):
        x, y, z = unscale_state(raw, StateVector.from_array(state))
        yield (unscale_time(raw, float(t)), x, y, z)


def simulation_report(
    tr: Trajectory,
    verdict: AsymptoticVerdict,
    samples: int = 0,
) -> SimulationReport:
    """Bundle a verdict with its integration settings and an optional down-sampled trajectory."""
    rows: list[tuple[float, float, float, float]] = []
    if samples > 0:
        idx = np.unique(np.linspace(0, tr.times.size - 1, min(samples, tr.times.size)).round().astype(int))
        rows = [
            (float(tr.times[i]), float(tr.states[i, 0]), float(tr.states[i, 1]), float(tr.states[i, 2]))
            for i in idx
        ]
    return SimulationReport(
        params=tr.params,
        initial_state=tr.initial_state,
        t_end=tr.t_end,
        rel_tol=tr.rel_tol,
        abs_tol=tr.abs_tol,
        accepted_steps=tr.accepted_steps,
        rejected_steps=tr.rejected_steps,
        clamped=tr.clamped,
        verdict=verdict,
        samples=rows,
    )
