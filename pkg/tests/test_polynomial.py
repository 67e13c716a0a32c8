"""Tests for the cubic solver and the 3x3 eigenvalue routine."""

import numpy as np
import pytest

from app.services.polynomial import (
    as_pairs,
    char_poly_of,
    companion_matrix,
    companion_roots,
    cubic_roots,
    eigen_residual,
    eigenvalues,
)


def _match(found: np.ndarray, expected: np.ndarray, tol: float) -> bool:
    """Every expected root has a found root within ``tol``."""
    remaining = list(found)
    for lam in expected:
        dist = [abs(lam - mu) for mu in remaining]
        i = int(np.argmin(dist))
        if dist[i] > tol:
            return False
        remaining.pop(i)
    return True


class TestCubicRoots:
    def test_triple_root(self):
        roots = cubic_roots(3.0, 3.0, 1.0)
        np.testing.assert_allclose(roots, [-1.0, -1.0, -1.0], atol=1e-12)

    def test_three_real_roots_sorted(self):
        # (l - 1)(l - 2)(l - 3)
        roots = cubic_roots(-6.0, 11.0, -6.0)
        np.testing.assert_allclose(roots.real, [3.0, 2.0, 1.0], atol=1e-12)
        assert np.all(roots.imag == 0.0)

    def test_pure_imaginary_pair(self):
        # (l + 2)(l^2 + 4)
        roots = cubic_roots(2.0, 4.0, 8.0)
        assert _match(roots, np.array([2j, -2j, -2.0]), 1e-12)

    def test_conjugate_symmetry(self):
        roots = cubic_roots(0.5, 2.0, 3.0)
        complex_roots = roots[roots.imag != 0.0]
        assert complex_roots.size == 2
        assert complex_roots[0] == np.conj(complex_roots[1])

    def test_against_numpy(self, rng):
        for _ in range(500):
            a1, a2, a3 = rng.uniform(-3.0, 3.0, size=3)
            expected = np.roots([1.0, a1, a2, a3])
            assert _match(cubic_roots(a1, a2, a3), expected, 1e-6)

    def test_companion_matrix(self):
        C = companion_matrix(1.0, 2.0, 3.0)
        assert char_poly_of(C) == pytest.approx((1.0, 2.0, 3.0))
        assert _match(companion_roots(1.0, 2.0, 3.0), cubic_roots(1.0, 2.0, 3.0), 1e-10)


class TestEigenvalues:
    def test_char_poly_matches_numpy(self, rng):
        for _ in range(100):
            J = rng.normal(size=(3, 3))
            np.testing.assert_allclose(char_poly_of(J), np.poly(J)[1:], atol=1e-12)

    def test_against_numpy(self, rng):
        for _ in range(300):
            J = rng.normal(size=(3, 3))
            eigs = eigenvalues(J)
            assert _match(eigs, np.linalg.eigvals(J), 1e-6)
            assert eigen_residual(J, eigs) < 1e-9

    def test_sorted_by_real_part(self, rng):
        J = rng.normal(size=(3, 3))
        eigs = eigenvalues(J)
        assert list(eigs.real) == sorted(eigs.real, reverse=True)

    def test_diagonal(self):
        pairs = as_pairs(eigenvalues(np.diag([0.6, -0.4, -0.2])))
        assert [re for re, _im in pairs] == pytest.approx([0.6, -0.2, -0.4], abs=1e-12)
        assert all(im == 0.0 for _re, im in pairs)
