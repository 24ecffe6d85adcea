# -*- coding: utf-8 -*-
"""
Unit Tests für die Soliton-Engine
"""
import math

import numpy as np
import pytest

from core.exceptions import (
    ConfigurationError,
    ConventionViolation,
    PoleEvaluation,
    SingularAssembly,
)
from core.soliton_engine import (
    _eigenvector_taylor,
    assemble_M_generic,
    assemble_M_highorder,
    assemble_M_simple,
    bordered_determinants,
    dressing_P1,
    dressing_P2,
    dressing_residue,
    eigenvectors_simple,
    evaluate,
    kernel_series,
    one_soliton_determinant,
    perturbed_eigenvectors,
    phase,
    phase_series,
    q_highorder,
    q_one_soliton_closed,
    q_simple,
)
from core.spectral_config import to_exponent_encoding, validate_config

SIMPLE_PRESETS = ["fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10"]
CONVENTION_PRESETS = ["fig1", "fig2", "fig3", "fig4", "fig5"]


def _lattice(x_range=(-10.0, 10.0), nx=41, t_range=(-5.0, 5.0), nt=21):
    return [(float(x), float(t)) for t in np.linspace(*t_range, nt) for x in np.linspace(*x_range, nx)]


def _anti_hermitian_error(matrix):
    return np.linalg.norm(matrix + matrix.conj().T) / np.linalg.norm(matrix)


class TestPhase:
    """Test-Suite für theta und seine Taylor-Reihe"""

    def test_phase_value(self):
        """Test: theta(1, 0.5, 1+i) = -5 - 3i"""
        assert phase(1.0, 0.5, 1 + 1j) == pytest.approx(-5 - 3j)

    def test_phase_series_coefficients(self):
        """Test: Ableitungen von theta nach k"""
        x, t, k = 0.7, -0.3, 0.4 + 0.9j
        series = phase_series(x, t, k, 4)
        assert series.coeff(0, 0) == pytest.approx(phase(x, t, k))
        assert series.coeff(1, 0) == pytest.approx(1j * x + 12j * k ** 2 * t)
        assert series.coeff(2, 0) == pytest.approx(12j * k * t)
        assert series.coeff(3, 0) == pytest.approx(4j * t)
        assert series.coeff(4, 0) == 0

    def test_phase_series_evaluates_exactly(self):
        """Test: Die Reihe ist ein Polynom dritten Grades in eps"""
        x, t, k, eps = 1.3, 0.4, 0.5 + 0.5j, 0.2 - 0.1j
        series = phase_series(x, t, k, 3)
        assert series.evaluate(eps, 0) == pytest.approx(phase(x, t, k + eps), rel=1e-13)


class TestAssembly:
    """Test-Suite für die Matrix M"""

    @pytest.mark.parametrize("name", SIMPLE_PRESETS)
    def test_anti_hermitian_presets(self, name, preset_config):
        """Test: M^dagger = -M für alle Presets erster Ordnung"""
        cfg = preset_config(name)
        rng = np.random.default_rng(5)
        for _ in range(50):
            x, t = rng.uniform(-10, 10), rng.uniform(-5, 5)
            assert _anti_hermitian_error(assemble_M_simple(cfg, x, t).matrix) <= 1e-12

    def test_anti_hermitian_highorder(self, second_order_config):
        """Test: Auch die Block-Matrix hoher Ordnung ist anti-hermitesch"""
        for x, t in [(0.0, 0.0), (0.8, -0.4), (-2.0, 1.0)]:
            assert _anti_hermitian_error(assemble_M_highorder(second_order_config, x, t).matrix) <= 1e-12

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_generic_matches_blocks(self, seed, random_simple_config):
        """Test: Blockformeln stimmen mit m_il = Uhat_i U_l / (k_l - k_hat_i) überein"""
        cfg = random_simple_config(seed, 3)
        for x, t in [(0.3, 0.2), (-1.5, 0.7), (4.0, -1.0)]:
            block = assemble_M_simple(cfg, x, t).matrix
            generic = assemble_M_generic(eigenvectors_simple(cfg, x, t, normalized=True))
            np.testing.assert_allclose(generic, block, rtol=1e-12, atol=1e-14 * np.max(np.abs(block)))

    def test_full_matrix_rescales(self, preset_config):
        """Test: M = D M~ D stimmt mit unnormalisierten Eigenvektoren überein"""
        cfg = preset_config("fig9")
        x, t = 0.6, -0.2
        assembly = assemble_M_simple(cfg, x, t)
        unscaled = assemble_M_generic(eigenvectors_simple(cfg, x, t, normalized=False))
        np.testing.assert_allclose(assembly.full_matrix(), unscaled, rtol=1e-11, atol=1e-12 * np.max(np.abs(unscaled)))

    def test_simple_requires_order_one(self, second_order_config):
        """Test: Einfache Assemblierung lehnt hohe Ordnung ab"""
        with pytest.raises(ConfigurationError):
            assemble_M_simple(second_order_config, 0.0, 0.0)

    def test_highorder_size(self, preset_config):
        """Test: Größe 2 N0"""
        cfg = preset_config("fig14")
        assembly = assemble_M_highorder(cfg, 0.1, 0.1)
        assert assembly.size == 2 * cfg.total_order == 6
        assert assembly.kind == "highorder"


class TestFieldEvaluation:
    """Test-Suite für q"""

    @pytest.mark.parametrize("name", CONVENTION_PRESETS)
    def test_closed_form_equivalence(self, name, preset_config):
        """Test: Geschlossene 2x2-Form stimmt mit der LU-Auswertung überein"""
        cfg = preset_config(name)
        for x, t in _lattice():
            reference = q_simple(cfg, x, t).q
            closed = q_one_soliton_closed(cfg, x, t)
            assert abs(closed - reference) <= 1e-10 * max(1.0, abs(reference))

    @pytest.mark.parametrize("name", CONVENTION_PRESETS)
    def test_determinant_is_positive(self, name, preset_config):
        """Test: det M für N=1 ist reell, positiv und gleich der expliziten Formel"""
        cfg = preset_config(name)
        for x, t in _lattice((-3.0, 3.0), 7, (-1.0, 1.0), 5):
            explicit = one_soliton_determinant(cfg, x, t)
            assembly = assemble_M_simple(cfg, x, t)
            assert explicit > 0
            assert assembly.log_abs_det_M == pytest.approx(math.log(explicit), abs=1e-10)
            assert assembly.lu.det_phase == pytest.approx(1.0, abs=1e-10)

    def test_closed_form_requires_convention(self, preset_config):
        """Test: b = a*, d = c* wird geprüft"""
        with pytest.raises(ConventionViolation):
            q_one_soliton_closed(preset_config("fig6"), 0.0, 0.0)

    def test_closed_form_requires_one_pole(self, preset_config):
        """Test: Nur N = 1"""
        with pytest.raises(ConfigurationError):
            one_soliton_determinant(preset_config("fig9"), 0.0, 0.0)

    @pytest.mark.parametrize("name", ["fig3", "fig9", "fig10"])
    def test_bordered_determinants(self, name, preset_config):
        """Test: -2i det H / det M in beiden Anordnungen gleich 2i row M^-1 col"""
        cfg = preset_config(name)
        assembly = assemble_M_simple(cfg, 0.4, -0.3)
        determinants = bordered_determinants(assembly)
        q = assembly.q()
        assert determinants.q_leading == pytest.approx(q, rel=1e-10, abs=1e-12)
        assert determinants.q_trailing == pytest.approx(q, rel=1e-10, abs=1e-12)

    @pytest.mark.parametrize("name", ["fig5", "fig9", "fig10"])
    def test_highorder_reduces_to_simple(self, name, preset_config):
        """Test: Hochordnungs-Pfad mit Ordnung 1 entspricht dem einfachen Pfad"""
        cfg = preset_config(name)
        encoded = validate_config(to_exponent_encoding(cfg))
        for x, t in _lattice(nx=11, nt=5):
            reference = q_simple(cfg, x, t).q
            value = q_highorder(encoded, x, t).q
            assert abs(value - reference) <= 1e-9 * max(1.0, abs(reference))

    def test_highorder_accepts_raw_amplitudes(self, preset_config):
        """Test: Rohamplituden mit Nullen laufen auch im Hochordnungs-Pfad"""
        cfg = preset_config("fig1")
        for x, t in [(0.0, 0.0), (1.5, -0.5), (-3.0, 2.0)]:
            assert q_highorder(cfg, x, t).q == pytest.approx(q_simple(cfg, x, t).q, rel=1e-9, abs=1e-12)

    def test_evaluate_dispatch(self, preset_config, second_order_config):
        """Test: evaluate wählt den Pfad nach der maximalen Ordnung"""
        cfg = preset_config("fig3")
        assert evaluate(cfg, 0.2, 0.1).q == q_simple(cfg, 0.2, 0.1).q
        assert evaluate(second_order_config, 0.2, 0.1).q == q_highorder(second_order_config, 0.2, 0.1).q

    def test_large_coordinates_do_not_overflow(self, preset_config):
        """Test: Normalisierung hält q auch weit draußen endlich"""
        for name in ("fig2", "fig9", "fig14"):
            sample = evaluate(preset_config(name), 300.0, 30.0)
            assert np.isfinite(sample.q)
            assert np.isfinite(sample.log_abs_det_M)

    def test_singular_flag_and_strict(self, preset_config):
        """Test: Singuläre Punkte werden markiert, strict wirft"""
        cfg = preset_config("fig5")
        sample = evaluate(cfg, 0.0, 0.0, singular_threshold=1e300)
        assert sample.singular_flag
        with pytest.raises(SingularAssembly):
            evaluate(cfg, 0.0, 0.0, singular_threshold=1e300, strict=True)
        assert not evaluate(cfg, 0.0, 0.0).singular_flag

    def test_field_sample_to_dict(self, preset_config):
        """Test: q als [re, im]"""
        sample = evaluate(preset_config("fig5"), 0.5, 0.5)
        data = sample.to_dict()
        assert data["q"] == [sample.q.real, sample.q.imag]
        assert set(data) == {"x", "t", "q", "abs_det_M", "singular_flag", "log_abs_det_M", "cond_estimate"}


class TestTaylorCoefficients:
    """Test-Suite für die Taylor-Koeffizienten der Eigenvektoren"""

    def test_border_log_derivatives(self, second_order_config):
        """Test: U^[1] / U^[0] entspricht den logarithmischen Ableitungen"""
        cfg = second_order_config
        pole = cfg.poles[0]
        k, kc = pole.k, pole.k.conjugate()
        x, t = 0.7, -0.4

        direct, _ = _eigenvector_taylor(cfg, 0, x, t, 2, hat=False, normalized=False)
        reflected, _ = _eigenvector_taylor(cfg, 1, x, t, 2, hat=False, normalized=False)
        direct_hat, _ = _eigenvector_taylor(cfg, 0, x, t, 2, hat=True, normalized=False)
        reflected_hat, _ = _eigenvector_taylor(cfg, 1, x, t, 2, hat=True, normalized=False)

        assert direct[0, 1] / direct[0, 0] == pytest.approx(pole.coeff_a[1] + 1j * x + 12j * k ** 2 * t)
        assert reflected[0, 1] / reflected[0, 0] == pytest.approx(pole.coeff_c[1] - 1j * x + 12j * k ** 2 * t)
        assert direct_hat[4, 1] / direct_hat[4, 0] == pytest.approx(1j * x + 12j * kc ** 2 * t)
        assert reflected_hat[4, 1] / reflected_hat[4, 0] == pytest.approx(-1j * x + 12j * kc ** 2 * t)
        assert direct_hat[0, 1] / direct_hat[0, 0] == pytest.approx(
            pole.coeff_a[1].conjugate() - (1j * x + 12j * kc ** 2 * t)
        )

    def test_zeroth_coefficients_match_pointwise(self, second_order_config):
        """Test: Nullte Koeffizienten = punktweise Eigenvektoren bei eps = 0"""
        cfg = second_order_config
        for index in range(2):
            u, _ = _eigenvector_taylor(cfg, index, 0.3, 0.2, 1, hat=False, normalized=False)
            uhat, _ = _eigenvector_taylor(cfg, index, 0.3, 0.2, 1, hat=True, normalized=False)
            U, Uhat = perturbed_eigenvectors(cfg, index, 0.3, 0.2, 0, 0)
            np.testing.assert_allclose(u[:, 0], U, rtol=1e-13)
            np.testing.assert_allclose(uhat[:, 0], Uhat, rtol=1e-13)
            np.testing.assert_allclose(Uhat, U.conj(), rtol=1e-13)

    def test_kernel_constant_term(self, preset_config):
        """Test: (0,0)-Koeffizient des Kerns ist der Matrixeintrag"""
        cfg = preset_config("fig9")
        x, t = 0.5, 0.25
        full = assemble_M_simple(cfg, x, t).full_matrix()
        scale = 1e-12 * float(np.max(np.abs(full)))
        for i in range(4):
            for j in range(4):
                assert kernel_series(i, j, cfg, x, t, 0, 0).coeff(0, 0) == pytest.approx(full[i, j], rel=1e-10, abs=scale)


class TestDressing:
    """Test-Suite für P1, P2 und P1^[1]"""

    def test_residue_reconstructs_q(self, preset_config):
        """Test: q = -2i (P1^[1])_15"""
        cfg = preset_config("fig4")
        for x, t in [(0.0, 0.0), (1.2, -0.7), (-2.5, 1.5)]:
            residue = dressing_residue(cfg, x, t)
            assert -2j * residue[0, 4] == pytest.approx(q_simple(cfg, x, t).q, rel=1e-9, abs=1e-12)

    def test_p1_annihilates_eigenvectors(self, preset_config):
        """Test: P1(k_l) U_l = 0"""
        cfg = preset_config("fig9")
        assembly = assemble_M_simple(cfg, 0.3, 0.1)
        for index, k in enumerate(assembly.poles.upper):
            vector = assembly.U[index]
            assert np.linalg.norm(dressing_P1(assembly, k=k) @ vector) <= 1e-9 * np.linalg.norm(vector)

    def test_p1_p2_inverse(self, preset_config):
        """Test: P1(k) P2(k) = I"""
        assembly = assemble_M_simple(preset_config("fig3"), -0.4, 0.6)
        for k in (0.3 + 2j, -1.1 + 0.2j, 2.0 - 0.7j):
            product = dressing_P1(assembly, k=k) @ dressing_P2(assembly, k=k)
            np.testing.assert_allclose(product, np.eye(5), atol=1e-9)

    def test_evaluation_at_pole(self, preset_config):
        """Test: P1 am Pol k_hat und P2 am Pol k werfen PoleEvaluation"""
        cfg = preset_config("fig5")
        k = cfg.poles[0].k
        with pytest.raises(PoleEvaluation):
            dressing_P1(cfg, 0.0, 0.0, k=k.conjugate())
        with pytest.raises(PoleEvaluation):
            dressing_P2(cfg, 0.0, 0.0, k=-k)

    def test_dressing_requires_position(self, preset_config):
        """Test: Konfiguration ohne (x, t)"""
        with pytest.raises(ValueError):
            dressing_residue(preset_config("fig5"))
