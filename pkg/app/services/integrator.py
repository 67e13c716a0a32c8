"""Dormand-Prince 5(4) embedded Runge-Kutta pair with PI step control.

The fifth-order solution is propagated (local extrapolation), the
fourth-order companion gives the error estimate, and the last stage is
reused as the first stage of the next step (FSAL). Output is produced on a
uniform grid by cubic Hermite interpolation between accepted steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
import structlog

from app.errors import IntegrationError

logger = structlog.get_logger(__name__)

# Butcher tableau
C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
A = [
    np.array([]),
    np.array([1 / 5]),
    np.array([3 / 40, 9 / 40]),
    np.array([44 / 45, -56 / 15, 32 / 9]),
    np.array([19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729]),
    np.array([9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656]),
    np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84]),
]
B5 = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
# fifth minus fourth order weights
E = np.array([71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40])

ORDER = 5
SAFETY = 0.9
MIN_FACTOR = 0.2
MAX_FACTOR = 10.0
PI_ALPHA = 0.7 / ORDER
PI_BETA = 0.4 / ORDER
# step sizes below this fraction of t_end count as underflow
UNDERFLOW_FRACTION = 1e-14


@dataclass(frozen=True)
class DenseSolution:
    """Uniformly sampled solution plus step statistics."""

    times: np.ndarray
    states: np.ndarray
    accepted_steps: int
    rejected_steps: int
    clamped: int
    most_negative: float


class _ClampedField:
    """Wraps f so that negative components are set to 0 before evaluation."""

    def __init__(self, f: Callable[[np.ndarray], np.ndarray]):
        self.f = f
        self.clamped = 0
        self.most_negative = 0.0

    def clamp(self, y: np.ndarray) -> np.ndarray:
        low = float(y.min())
        if low < 0.0:
            self.clamped += 1
            self.most_negative = min(self.most_negative, low)
            return np.maximum(y, 0.0)
        return y

    def __call__(self, y: np.ndarray) -> np.ndarray:
        return self.f(self.clamp(y))


def _rms(err: np.ndarray, scale: np.ndarray) -> float:
    return float(np.sqrt(np.mean((err / scale) ** 2)))


def _initial_step(f, y0: np.ndarray, f0: np.ndarray, t_end: float, rel_tol: float, abs_tol: float) -> float:
    scale = abs_tol + rel_tol * np.abs(y0)
    d0 = _rms(y0, scale)
    d1 = _rms(f0, scale)
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    h0 = min(h0, t_end)
    d2 = _rms(f(y0 + h0 * f0) - f0, scale) / h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** (1.0 / ORDER)
    return min(100.0 * h0, h1, t_end)


def _hermite(theta: np.ndarray, h: float, y0, f0, y1, f1) -> np.ndarray:
    th = theta[:, None]
    h00 = 2 * th**3 - 3 * th**2 + 1
    h10 = th**3 - 2 * th**2 + th
    h01 = -2 * th**3 + 3 * th**2
    h11 = th**3 - th**2
    return h00 * y0 + h10 * h * f0 + h01 * y1 + h11 * h * f1


def solve(
    f: Callable[[np.ndarray], np.ndarray],
    y0: np.ndarray,
    t_end: float,
    rel_tol: float,
    abs_tol: float,
    output_intervals: int,
    max_steps: int,
) -> DenseSolution:
    """Integrate y' = f(y) on [0, t_end] keeping y in the nonnegative orthant.

    Args:
        f: Autonomous right-hand side.
        y0: Initial state.
        t_end: Final time (> 0).
        rel_tol: Relative tolerance of the error test.
        abs_tol: Absolute tolerance of the error test.
        output_intervals: Number of uniform output intervals over [0, t_end].
        max_steps: Budget of attempted steps.

    Returns:
        Dense output on ``output_intervals + 1`` uniform times.

    Raises:
        IntegrationError: Step size underflow or step budget exhausted.
    """
    field = _ClampedField(f)
    grid = np.linspace(0.0, t_end, output_intervals + 1)
    out = np.empty((grid.size, y0.size))

    y = field.clamp(np.asarray(y0, dtype=float).copy())
    out[0] = y
    next_idx = 1

    t = 0.0
    fy = field(y)
    h = _initial_step(field, y, fy, t_end, rel_tol, abs_tol)
    h_min = UNDERFLOW_FRACTION * t_end
    err_prev = 1.0
    accepted = rejected = 0

    k = np.empty((7, y.size))
    while t < t_end:
        if accepted + rejected >= max_steps:
            raise IntegrationError(f"step budget of {max_steps} exhausted at t = {t!r}")
        remaining = t_end - t
        last = h >= remaining
        if last:
            h = remaining
        elif h < h_min:
            raise IntegrationError(f"step size {h!r} underflowed at t = {t!r}")

        k[0] = fy
        for i in range(1, 7):
            k[i] = field(y + h * (A[i] @ k[:i]))
        y_new = y + h * (B5 @ k)
        err = h * (E @ k)

        scale = abs_tol + rel_tol * np.maximum(np.abs(y), np.abs(y_new))
        err_norm = _rms(err, scale)

        if err_norm <= 1.0:
            t_new = t_end if last else t + h
            y_new = field.clamp(y_new)
            # FSAL: the seventh stage was evaluated at y_new
            f_new = k[6].copy()

            stop = np.searchsorted(grid, t_new, side="right")
            if last:
                stop = grid.size
            if stop > next_idx:
                theta = (grid[next_idx:stop] - t) / h
                dense = _hermite(np.clip(theta, 0.0, 1.0), h, y, fy, y_new, f_new)
                out[next_idx:stop] = np.maximum(dense, 0.0)
                next_idx = stop

            t, y, fy = t_new, y_new, f_new
            accepted += 1

            if err_norm == 0.0:
                factor = MAX_FACTOR
            else:
                factor = SAFETY * err_norm ** (-PI_ALPHA) * err_prev ** PI_BETA
            h *= min(MAX_FACTOR, max(MIN_FACTOR, factor))
            err_prev = max(err_norm, 1e-4)
        else:
            rejected += 1
            h *= max(MIN_FACTOR, SAFETY * err_norm ** (-1.0 / ORDER))

    if field.clamped:
        logger.info(
            "negative_components_clamped",
            count=field.clamped,
            most_negative=field.most_negative,
        )

    times = grid.copy()
    times.setflags(write=False)
    out.setflags(write=False)
    return DenseSolution(
        times=times,
        states=out,
        accepted_steps=accepted,
        rejected_steps=rejected,
        clamped=field.clamped,
        most_negative=field.most_negative,
    )
