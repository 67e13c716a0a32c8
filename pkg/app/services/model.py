"""Vector field, Jacobian and rescaling of the two-genotype predator-prey model.

Dimensional model (time tau)::

    x' = R (1 - x/K) x - (h y + g z) xi x / (x + mu)
    y' = p e (h y + g z) xi x / (x + mu) - m y
    z' = q e (h y + g z) xi x / (x + mu) - n z

With x = K X, y = (e/g) Y, z = (e/g) Z and t = e tau it becomes::

    X' = r (1 - X) X - (c Y + Z) B X / (X + A)
    Y' = w (c Y + Z) B X / (X + A) - s Y
    Z' = v (c Y + Z) B X / (X + A) - d Z
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np
import structlog

from app.config import settings
from app.errors import DomainError
from app.schemas.parameters import ParameterBlock, RawParameters, ScaledParameters, StateVector

logger = structlog.get_logger(__name__)

# 3x3 real matrix, always returned as a fresh float ndarray
Matrix3 = np.ndarray


# ---------------------------------------------------------------------------
# Rescaling
# ---------------------------------------------------------------------------

def _check_rescalable(raw: RawParameters) -> None:
    for name in ("g", "e", "Ktilde"):
        if getattr(raw, name) <= 0.0:
            raise DomainError(f"rescaling undefined: {name} must be > 0")


def rescale(raw: RawParameters) -> ScaledParameters:
    """Map dimensional constants to the nondimensional ones.

    r = R/e, c = h/g, w = p g K, s = m/e, v = q g K, d = n/e, B = xi/K, A = mu/K.
    """
    _check_rescalable(raw)
    return ScaledParameters(
        r=raw.R / raw.e,
        c=raw.h / raw.g,
        w=raw.p * raw.g * raw.Ktilde,
        s=raw.m / raw.e,
        v=raw.q * raw.g * raw.Ktilde,
        d=raw.n / raw.e,
        B=raw.xi / raw.Ktilde,
        A=raw.mu / raw.Ktilde,
    )


def unscale_state(raw: RawParameters, u: StateVector) -> tuple[float, float, float]:
    """Return the dimensional densities (x, y, z) of a scaled state."""
    _check_rescalable(raw)
    predator_scale = raw.e / raw.g
    return (raw.Ktilde * u.X, predator_scale * u.Y, predator_scale * u.Z)


def unscale_time(raw: RawParameters, t: float) -> float:
    """Return the dimensional time tau = t / e."""
    _check_rescalable(raw)
    return t / raw.e


def resolve_parameters(block: ParameterBlock, A: float | None = None) -> ScaledParameters:
    """Turn a parameter-file block into the scaled parameters all analysis runs on."""
    if block.scaled is not None:
        scaled = block.scaled
        source = "scaled"
    else:
        scaled = rescale(block.raw)
        source = "raw"
    if A is not None:
        scaled = scaled.with_A(A)
    logger.debug("parameters_resolved", source=source, A=scaled.A)
    return scaled


# ---------------------------------------------------------------------------
# Vector fields
# ---------------------------------------------------------------------------

def vector_field(p: ScaledParameters) -> Callable[[np.ndarray], np.ndarray]:
    """Return f(u) for the scaled model, closed over the parameter values."""
    A = p.require_A()
    r, c, w, s, v, d, B = p.r, p.c, p.w, p.s, p.v, p.d, p.B
    zero_tol = settings.zero_tol

    def field(u: np.ndarray) -> np.ndarray:
        X, Y, Z = u
        denom = X + A
        if abs(denom) <= zero_tol:
            raise DomainError("X + A = 0: Holling response undefined")
        predation = (c * Y + Z) * B * X / denom
        return np.array(
            [
                r * (1.0 - X) * X - predation,
                w * predation - s * Y,
                v * predation - d * Z,
            ]
        )

    return field


def rhs_scaled(p: ScaledParameters, u: StateVector) -> StateVector:
    """Evaluate (X', Y', Z') of the scaled model."""
    return StateVector.from_array(vector_field(p)(u.as_array()))


def rhs_raw(raw: RawParameters, state: Sequence[float]) -> tuple[float, float, float]:
    """Evaluate (x', y', z') of the dimensional model."""
    x, y, z = (float(val) for val in state)
    if raw.Ktilde <= 0.0:
        raise DomainError("carrying capacity must be > 0")
    denom = x + raw.mu
    if abs(denom) <= settings.zero_tol:
        raise DomainError("x + mu = 0: Holling response undefined")
    response = raw.xi * x / denom
    hunting = raw.h * y + raw.g * z
    return (
        raw.R * (1.0 - x / raw.Ktilde) * x - hunting * response,
        raw.p * raw.e * hunting * response - raw.m * y,
        raw.q * raw.e * hunting * response - raw.n * z,
    )


def jacobian(p: ScaledParameters, u: StateVector) -> Matrix3:
    """Jacobian of the scaled vector field at ``u``."""
    A = p.require_A()
    X, Y, Z = u.X, u.Y, u.Z
    denom = X + A
    if abs(denom) <= settings.zero_tol:
        raise DomainError("X + A = 0: Jacobian undefined")

    r, c, w, s, v, d, B = p.r, p.c, p.w, p.s, p.v, p.d, p.B
    response = B * X / denom
    # d/dX [B X / (X + A)] = B A / (X + A)^2
    slope = (c * Y + Z) * B * A / denom**2

    return np.array(
        [
            [r * (1.0 - 2.0 * X) - slope, -c * response, -response],
            [w * slope, w * c * response - s, w * response],
            [v * slope, v * c * response, v * response - d],
        ]
    )
