# -*- coding: utf-8 -*-
"""
Unit Tests für die äquilibrierte LU-Zerlegung
"""
import math

import numpy as np
import pytest

from core.dense_lu import factorize


@pytest.fixture
def random_matrix():
    rng = np.random.default_rng(11)
    return rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))


class TestFactorize:
    """Test-Suite für factorize"""

    def test_determinant_matches_numpy(self, random_matrix):
        """Test: Determinante stimmt mit numpy überein"""
        lu = factorize(random_matrix)
        assert lu.determinant == pytest.approx(complex(np.linalg.det(random_matrix)), rel=1e-12)
        assert not lu.singular

    def test_solve(self, random_matrix):
        """Test: Lösen von M x = b für Vektor und Matrix"""
        lu = factorize(random_matrix)
        b = np.arange(5) + 1j
        np.testing.assert_allclose(random_matrix @ lu.solve(b), b, atol=1e-12)
        rhs = np.eye(5)
        np.testing.assert_allclose(random_matrix @ lu.solve(rhs), rhs, atol=1e-12)

    def test_solve_left(self, random_matrix):
        """Test: Lösen von y M = row"""
        lu = factorize(random_matrix)
        row = np.ones(5) - 2j
        np.testing.assert_allclose(lu.solve_left(row) @ random_matrix, row, atol=1e-12)

    def test_badly_scaled_matrix(self):
        """Test: log|det| bleibt auch bei Überlauf korrekt"""
        matrix = np.diag([1e200, 1e150]).astype(complex)
        lu = factorize(matrix)
        assert lu.log_abs_det == pytest.approx(350 * math.log(10.0), rel=1e-12)
        assert not lu.singular
        np.testing.assert_allclose(lu.solve(np.array([1e200, 1e150])), [1.0, 1.0])

    def test_singular_matrix_is_flagged(self):
        """Test: Exakt singuläre Matrix wird markiert, nicht abgelehnt"""
        lu = factorize(np.array([[1, 2], [2, 4]], dtype=complex))
        assert lu.singular
        assert lu.zero_pivot
        assert lu.determinant == 0
        assert lu.cond_estimate == math.inf
        assert np.all(np.isnan(lu.solve(np.ones(2))))

    def test_threshold(self):
        """Test: Schwelle bezieht sich auf die äquilibrierte Matrix"""
        matrix = np.array([[1.0, 1.0], [1.0, 1.0 + 1e-12]], dtype=complex)
        assert factorize(matrix, singular_threshold=1e-10).singular
        assert not factorize(np.eye(2), singular_threshold=1e-10).singular

    def test_identity_condition(self):
        """Test: Konditionsschätzung der Einheitsmatrix"""
        lu = factorize(np.eye(4, dtype=complex))
        assert lu.cond_estimate == pytest.approx(1.0)
        assert lu.size == 4

    def test_non_square(self):
        """Test: Nichtquadratische Matrizen werden abgelehnt"""
        with pytest.raises(ValueError):
            factorize(np.ones((2, 3)))
