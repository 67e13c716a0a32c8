"""Roots of monic cubics and eigenvalues of 3x3 matrices.

The closed form (trigonometric / Cardano on the depressed cubic) is polished
by Newton steps and checked against numpy on the companion matrix.
"""

from __future__ import annotations

import numpy as np
import structlog

logger = structlog.get_logger(__name__)

# Accept eigenvalues whose |det(J - lambda I)| / max(1, |J|)^3 is below this
EIGEN_RESIDUAL_TOL = 1e-9
NEWTON_STEPS = 3


def _sort_roots(roots: np.ndarray) -> np.ndarray:
    """Descending real part, then descending imaginary part."""
    order = np.lexsort((-roots.imag, -roots.real))
    return roots[order]


def _polish(roots: np.ndarray, a1: float, a2: float, a3: float) -> np.ndarray:
    polished = roots.copy()
    for i, lam in enumerate(polished):
        value = ((lam + a1) * lam + a2) * lam + a3
        for _ in range(NEWTON_STEPS):
            slope = (3.0 * lam + 2.0 * a1) * lam + a2
            if slope == 0:
                break
            candidate = lam - value / slope
            cand_value = ((candidate + a1) * candidate + a2) * candidate + a3
            if abs(cand_value) >= abs(value):
                break
            lam, value = candidate, cand_value
        polished[i] = lam
    return polished


def cubic_roots(a1: float, a2: float, a3: float) -> np.ndarray:
    """Roots of lambda^3 + a1 lambda^2 + a2 lambda + a3.

    Args:
        a1, a2, a3: Real coefficients of the monic cubic.

    Returns:
        Complex array of the three roots, sorted by descending real part.
        Conjugate pairs are returned with exact opposite imaginary parts.
    """
    shift = a1 / 3.0
    # lambda = y - a1/3 turns the cubic into y^3 + p y + q
    p = a2 - a1 * a1 / 3.0
    q = 2.0 * a1**3 / 27.0 - a1 * a2 / 3.0 + a3
    disc = (p / 3.0) ** 3 + (q / 2.0) ** 2

    if disc <= 0.0:
        if p == 0.0:
            ys = np.zeros(3)
        else:
            radius = 2.0 * np.sqrt(-p / 3.0)
            cos_arg = np.clip(-q / 2.0 / (-p / 3.0) ** 1.5, -1.0, 1.0)
            theta = np.arccos(cos_arg) / 3.0
            ys = radius * np.cos(theta - 2.0 * np.pi * np.arange(3) / 3.0)
        roots = ys.astype(complex) - shift
    else:
        root_disc = np.sqrt(disc)
        u = np.cbrt(-q / 2.0 + root_disc)
        v = np.cbrt(-q / 2.0 - root_disc)
        real_root = u + v - shift
        pair_re = -(u + v) / 2.0 - shift
        pair_im = np.sqrt(3.0) / 2.0 * (u - v)
        roots = np.array([real_root, complex(pair_re, pair_im), complex(pair_re, -pair_im)])

    roots = _polish(roots, a1, a2, a3)
    # keep conjugate symmetry after polishing
    for i in range(3):
        if abs(roots[i].imag) <= 1e-14 * max(1.0, abs(roots[i])):
            roots[i] = complex(roots[i].real, 0.0)
    complex_idx = [i for i in range(3) if roots[i].imag != 0.0]
    if len(complex_idx) == 2:
        i, j = complex_idx
        re = 0.5 * (roots[i].real + roots[j].real)
        im = 0.5 * (abs(roots[i].imag) + abs(roots[j].imag))
        roots[i], roots[j] = complex(re, im), complex(re, -im)
    return _sort_roots(roots)


def companion_matrix(a1: float, a2: float, a3: float) -> np.ndarray:
    """Frobenius companion matrix of the monic cubic."""
    return np.array(
        [
            [-a1, -a2, -a3],
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
        ]
    )


def companion_roots(a1: float, a2: float, a3: float) -> np.ndarray:
    return _sort_roots(np.linalg.eigvals(companion_matrix(a1, a2, a3)).astype(complex))


def char_poly_of(J: np.ndarray) -> tuple[float, float, float]:
    """(a1, a2, a3) of det(lambda I - J) = lambda^3 + a1 lambda^2 + a2 lambda + a3.

    a1 = -tr J, a2 = sum of principal 2x2 minors, a3 = -det J.
    """
    J = np.asarray(J, dtype=float)
    minors = (
        J[0, 0] * J[1, 1] - J[0, 1] * J[1, 0]
        + J[0, 0] * J[2, 2] - J[0, 2] * J[2, 0]
        + J[1, 1] * J[2, 2] - J[1, 2] * J[2, 1]
    )
    return (float(-np.trace(J)), float(minors), float(-np.linalg.det(J)))


def eigen_residual(J: np.ndarray, roots: np.ndarray) -> float:
    """max |det(J - lambda I)| / max(1, |J|_inf)^3 over the given roots."""
    J = np.asarray(J, dtype=float)
    scale = max(1.0, float(np.linalg.norm(J, ord=np.inf))) ** 3
    eye = np.eye(3)
    return max(float(abs(np.linalg.det(J - lam * eye))) for lam in roots) / scale


def eigenvalues(J: np.ndarray) -> np.ndarray:
    """Eigenvalues of a real 3x3 matrix, sorted by descending real part."""
    a1, a2, a3 = char_poly_of(J)
    closed = cubic_roots(a1, a2, a3)
    companion = companion_roots(a1, a2, a3)

    spread = float(np.max(np.abs(closed - companion)))
    if spread > 1e-6 * max(1.0, float(np.max(np.abs(companion)))):
        logger.debug("cubic_companion_disagree", spread=spread)

    for roots in (closed, companion):
        if eigen_residual(J, roots) < EIGEN_RESIDUAL_TOL:
            return roots

    roots = _sort_roots(np.linalg.eigvals(np.asarray(J, dtype=float)).astype(complex))
    logger.info("eigen_fallback", method="eigvals", residual=eigen_residual(J, roots))
    return roots


def as_pairs(roots: np.ndarray) -> list[tuple[float, float]]:
    """[re, im] pairs for serialization."""
    return [(float(lam.real), float(lam.imag)) for lam in roots]
