# -*- coding: utf-8 -*-
"""
Unit Tests für die Verifikationsroutinen
"""
import math

import numpy as np
import pytest

from analysis.figure_presets import preset_names
from analysis.verification import (
    CONVERGENCE_STEPS,
    DESIGN_ORDER,
    RESIDUAL_STEPS,
    VANISHING_RESIDUAL,
    ConvergenceReport,
    FieldEvaluator,
    check_dressing,
    check_kernel_series,
    check_reconstruction_consistency,
    check_reduction_highorder,
    contour_taylor_coefficients,
    convergence_passed,
    kernel_contour_radius,
    pde_residual,
    plane_wave_field,
    random_spectral_points,
    residual_convergence,
    run_verification_suite,
    strongest_residue_point,
    truncate_to_simple,
)
from core.exceptions import ConsistencyFailure, DressingFailure, ReductionFailure, SingularOnStencil
from core.soliton_engine import FieldSample, dressing_residue, q_simple

PLANE_WAVE = plane_wave_field(1.0 / math.sqrt(6.0), 1.0)
STENCIL_POINTS = [(0.3, 0.7), (-1.1, 0.2), (2.4, -0.5)]


class TestResidual:
    """Test-Suite für das PDE-Residuum"""

    def test_plane_wave_frequency(self):
        """Test: omega = -kappa^3 + 12|A|^2 kappa = 1"""
        assert PLANE_WAVE(0.0, 1.0) == pytest.approx(np.exp(-1j) / math.sqrt(6.0))

    def test_plane_wave_residual_small(self):
        """Test: Exakte Lösung hat kleines Residuum"""
        for x, t in STENCIL_POINTS:
            report = pde_residual(PLANE_WAVE, x, t, 1e-2)
            assert report.relative_residual < 1e-6

    def test_wrong_frequency_is_detected(self):
        """Test: Falsche Dispersionsrelation ergibt O(1)-Residuum"""
        def wrong(x, t):
            return np.exp(1j * (x - 2.0 * t)) / math.sqrt(6.0)

        assert pde_residual(wrong, 0.3, 0.7, 1e-2).relative_residual > 1e-2

    def test_convergence_order(self):
        """Test: Konvergenzordnung 4 für die ebene Welle"""
        report = residual_convergence(PLANE_WAVE, STENCIL_POINTS, [0.2, 0.1, 0.05])
        assert report.estimated_order == pytest.approx(DESIGN_ORDER, abs=0.3)
        assert report.self_convergence_order == pytest.approx(DESIGN_ORDER, abs=0.3)
        assert not report.floor_reached

    def test_convergence_requires_decreasing_steps(self):
        """Test: Mindestens drei streng fallende Schritte"""
        with pytest.raises(ValueError):
            residual_convergence(PLANE_WAVE, STENCIL_POINTS, [0.1, 0.05])
        with pytest.raises(ValueError):
            residual_convergence(PLANE_WAVE, STENCIL_POINTS, [0.1, 0.2, 0.05])

    def test_gate_design_order(self):
        """Test: Inkremente mit Ordnung 4 bestehen, Ordnung 2 nicht"""
        steps = [0.08, 0.04, 0.02]
        fourth = ConvergenceReport(steps, [1.0, 1.0, 1.0], 0.0, [1.6e-5, 1e-6], self_convergence_order=4.0)
        second = ConvergenceReport(steps, [1.0, 1.0, 1.0], 0.0, [4e-3, 1e-3], self_convergence_order=2.0)
        assert convergence_passed(fourth)
        assert not convergence_passed(second)

    def test_gate_vanishing_residual(self):
        """Test: Verschwindendes Residuum mit Steigung über 4 besteht"""
        report = ConvergenceReport([0.08, 0.04, 0.02], [2.4e-8, 3.3e-10, 1.4e-11], 5.40,
                                   [2.4e-8, 3.2e-10], self_convergence_order=6.27)
        assert convergence_passed(report)
        tiny = ConvergenceReport(list(RESIDUAL_STEPS), [5e-10, 6e-10, 7e-10], math.nan,
                                 self_convergence_order=math.nan, floor_reached=True)
        assert max(tiny.residual_norms) <= VANISHING_RESIDUAL
        assert convergence_passed(tiny)

    def test_gate_rounding_floor(self):
        """Test: Rundungsgrenze bei endlichem Residuum fällt durch"""
        report = ConvergenceReport(list(RESIDUAL_STEPS), [1e-3, 2e-3, 9e-3], -2.0, [1e-3, 7e-3],
                                   self_convergence_order=4.1, floor_reached=True)
        assert not convergence_passed(report)
        assert not convergence_passed(ConvergenceReport([0.2, 0.1, 0.05], [1.0, 1.0, 1.0], math.nan))

    def test_singular_stencil(self):
        """Test: Singulär markierte Stencilpunkte werden gemeldet"""
        def singular(x, t):
            return FieldSample(x, t, 0j, 0.0, True)

        with pytest.raises(SingularOnStencil):
            pde_residual(singular, 0.0, 0.0, 1e-3)

    def test_field_evaluator_sign(self, preset_config):
        """Test: Vorzeichenumkehr des Feldes"""
        cfg = preset_config("fig5")
        plus = FieldEvaluator(cfg)(0.4, 0.2).q
        minus = FieldEvaluator(cfg, sign=-1.0)(0.4, 0.2).q
        assert minus == -plus

    def test_residual_is_sign_invariant(self, preset_config):
        """Test: Das Residuum unterscheidet q und -q nicht"""
        cfg = preset_config("fig2")
        plus = pde_residual(FieldEvaluator(cfg), 0.2, 0.1, 1e-2).residual
        minus = pde_residual(FieldEvaluator(cfg, sign=-1.0), 0.2, 0.1, 1e-2).residual
        assert minus == pytest.approx(-plus, rel=1e-12, abs=1e-14)


class TestConsistency:
    """Test-Suite für die Rekonstruktion aus P1^[1]"""

    @pytest.mark.parametrize("name", ["fig3", "fig4", "fig9"])
    def test_structural_relations(self, name, preset_config):
        """Test: (1,5), (3,5), (5,1), (5,3) gelten exakt"""
        cfg = preset_config(name)
        rng = np.random.default_rng(2)
        for _ in range(10):
            x, t = rng.uniform(-5, 5), rng.uniform(-2, 2)
            report = check_reconstruction_consistency(cfg, x, t)
            assert report.structural_passed, report.to_dict()

    def test_matrix_perturbation_is_detected(self, preset_config):
        """Test: Gestörte Matrix verletzt die Relationen"""
        cfg = preset_config("fig3")
        report = check_reconstruction_consistency(cfg, 0.5, 0.2, matrix_perturbation=0.1)
        assert not report.structural_passed
        with pytest.raises(ConsistencyFailure):
            check_reconstruction_consistency(cfg, 0.5, 0.2, strict=True, matrix_perturbation=0.1)

    def test_flipped_sign_fails_reconstruction(self, preset_config):
        """Test: q -> -q verletzt q = -2i (P1^[1])_15"""
        cfg = preset_config("fig2")
        points = [(float(x), 0.0) for x in np.linspace(-3, 3, 13)]
        x, t = max(points, key=lambda p: abs(q_simple(cfg, *p).q))
        q = q_simple(cfg, x, t).q
        reconstructed = -2j * dressing_residue(cfg, x, t)[0, 4]
        assert abs(q) > 0.1
        assert reconstructed == pytest.approx(q, rel=1e-9)
        assert abs(reconstructed - (-q)) > 0.1

    def test_report_lists_all_relations(self, preset_config):
        """Test: Alle acht Einträge werden berichtet"""
        report = check_reconstruction_consistency(preset_config("fig5"), 0.1, 0.1)
        data = report.to_dict()
        assert [r["name"] for r in data["relations"]] == [
            "(1,5)", "(2,5)", "(3,5)", "(4,5)", "(5,1)", "(5,2)", "(5,3)", "(5,4)"
        ]
        assert sum(r["structural"] for r in data["relations"]) == 4


class TestReduction:
    """Test-Suite für die Reduktion hoher Ordnung"""

    @pytest.mark.parametrize("name", ["fig5", "fig9"])
    def test_reduction_exponent(self, name, preset_config):
        """Test: Umkodierte Rohamplituden"""
        lattice = [(float(x), float(t)) for t in np.linspace(-5, 5, 5) for x in np.linspace(-10, 10, 11)]
        report = check_reduction_highorder(preset_config(name), lattice)
        assert report.encoding == "exponent"
        assert report.passed
        assert report.points == len(lattice)

    def test_reduction_raw(self, preset_config):
        """Test: Amplitude 0 läuft mit Rohamplituden"""
        report = check_reduction_highorder(preset_config("fig1"), [(0.0, 0.0), (1.0, 1.0)])
        assert report.encoding == "raw"
        assert report.passed

    def test_truncated_high_order_differs(self, second_order_config):
        """Test: Abschneiden auf Ordnung 1 ändert die Lösung"""
        assert truncate_to_simple(second_order_config).is_simple
        with pytest.raises(ReductionFailure):
            check_reduction_highorder(second_order_config, [(0.0, 0.0), (0.5, 0.3), (-1.0, 0.2)], strict=True)


class TestDressing:
    """Test-Suite für die Dressing-Identitäten"""

    @pytest.mark.parametrize("name", ["fig3", "fig9"])
    def test_identities(self, name, preset_config):
        """Test: Kern, Inverse, Symmetrien und Abfall"""
        cfg = preset_config(name)
        report = check_dressing(cfg, random_spectral_points(cfg, 10, seed=4))
        assert report.passed, report.failures
        assert report.decay_ratio == pytest.approx(10.0, abs=1.0)

    @pytest.mark.parametrize("name", [f"fig{i}" for i in range(1, 11)])
    def test_all_simple_presets(self, name, preset_config):
        """Test: Alle Presets mit Ordnung 1 bestehen am automatisch gewählten Punkt"""
        cfg = preset_config(name)
        report = check_dressing(cfg, random_spectral_points(cfg, 10, seed=20240607))
        assert report.passed, report.to_dict()

    def test_decay_near_soliton(self, preset_config):
        """Test: fig2 fernab des Solitons fällt wie 1/k^2, am Soliton wie 1/k"""
        cfg = preset_config("fig2")
        samples = random_spectral_points(cfg, 4, seed=2)
        assert check_dressing(cfg, samples, x=1.0, t=0.5).decay_ratio > 50.0

        report = check_dressing(cfg, samples)
        assert report.decay_ratio == pytest.approx(10.0, abs=0.1)
        assert report.passed

    def test_strongest_residue_point(self, preset_config):
        """Test: Gewählter Punkt maximiert |P1^[1]| auf dem Gitter"""
        cfg = preset_config("fig2")
        lattice = [(0.0, 0.0), (1.0, 0.5), (3.0, 1.0)]
        chosen = strongest_residue_point(cfg, lattice)
        strengths = {p: float(np.max(np.abs(dressing_residue(cfg, *p)))) for p in lattice}
        assert strengths[chosen] == max(strengths.values())
        assert chosen == (0.0, 0.0)

    def test_strict_failure(self, preset_config):
        """Test: Negative Toleranz erzwingt DressingFailure"""
        cfg = preset_config("fig3")
        with pytest.raises(DressingFailure):
            check_dressing(cfg, random_spectral_points(cfg, 2, seed=1), tol=-1.0, strict=True)

    def test_random_points_avoid_poles(self, preset_config):
        """Test: Reproduzierbar und abseits der Pole"""
        cfg = preset_config("fig9")
        first = random_spectral_points(cfg, 5, seed=9)
        assert first == random_spectral_points(cfg, 5, seed=9)
        poles = [p.k for p in cfg.poles]
        forbidden = poles + [-k for k in poles] + [k.conjugate() for k in poles] + [-k.conjugate() for k in poles]
        assert all(min(abs(k - p) for p in forbidden) > 1e-2 for k in first)


class TestKernelSeries:
    """Test-Suite für die Taylor-Koeffizienten des Kerns"""

    def test_contour_oracle_on_exponential(self):
        """Test: Cauchy-Integral für exp(2e + 3eh)"""
        series = contour_taylor_coefficients(lambda e, eh: np.exp(2 * e + 3 * eh), 3, 3)
        for i in range(4):
            for j in range(4):
                expected = 2 ** i * 3 ** j / (math.factorial(i) * math.factorial(j))
                assert series.coeff(i, j) == pytest.approx(expected, rel=1e-8)

    def test_contour_requires_enough_points(self):
        """Test: Zu wenige Stützstellen"""
        with pytest.raises(ValueError):
            contour_taylor_coefficients(lambda e, eh: 1.0, 8, 0, points=8)

    @pytest.mark.parametrize("name", ["fig11", "fig14"])
    def test_presets(self, name, preset_config):
        """Test: kernel_series gegen Kontur und Differenzenquotienten"""
        report = check_kernel_series(preset_config(name), 0.5, 0.25)
        assert report.passed, report.to_dict()

    def test_radius_avoids_kernel_pole(self, preset_config):
        """Test: fig1 hat k_j - k_hat_i = 0.02, der Radius schrumpft auf 0.005"""
        cfg = preset_config("fig1")
        radii = [kernel_contour_radius(cfg, i, j) for i in range(2) for j in range(2)]
        assert min(radii) == pytest.approx(0.005)
        assert max(radii) <= 0.05

    def test_close_poles(self, preset_config):
        """Test: fig1 besteht trotz eng benachbarter Pole"""
        report = check_kernel_series(preset_config("fig1"), 0.5, 0.25)
        assert report.passed, report.to_dict()
        assert report.min_radius == pytest.approx(0.005)

    def test_generic_second_order(self, second_order_config):
        """Test: Nichttriviale Koeffizienten erster Ordnung"""
        report = check_kernel_series(second_order_config, 0.5, 0.25)
        assert report.passed, report.to_dict()


class TestSuiteRunner:
    """Test-Suite für run_verification_suite"""

    def test_identity_suites_pass(self, preset_config):
        """Test: Dressing, Reduktion, Rekonstruktion und Reihen für fig3"""
        report = run_verification_suite(
            preset_config("fig3"), suites=["consistency", "dressing", "reduction", "series"], seed=3
        )
        assert report["passed"]
        assert set(report["suites"]) == {"consistency", "dressing", "reduction", "series"}
        assert report["seed"] == 3

    def test_highorder_skips_simple_suites(self, preset_config):
        """Test: Prüfungen nur für einfache Pole werden übersprungen"""
        report = run_verification_suite(preset_config("fig11"), suites=["dressing", "consistency"])
        assert report["suites"]["dressing"]["status"] == "skipped"
        assert report["suites"]["consistency"]["status"] == "skipped"
        assert report["passed"]

    def test_residual_suite_reports_points(self, preset_config):
        """Test: Residuum mit fester Punktzahl und Seed"""
        cfg = preset_config("fig5")
        first = run_verification_suite(cfg, suites=["residual"], points=3, seed=11)
        second = run_verification_suite(cfg, suites=["residual"], points=3, seed=11)
        suite = first["suites"]["residual"]
        assert suite["status"] in ("passed", "failed")
        assert len(suite["reports"]) == 3
        assert suite["reports"] == second["suites"]["residual"]["reports"]

    def test_settings_dict(self, preset_config):
        """Test: Toleranzen aus einem Einstellungs-Dict"""
        report = run_verification_suite(preset_config("fig3"), {"identity_tolerance": -1.0}, suites=["dressing"])
        assert not report["passed"]
        assert report["suites"]["dressing"]["status"] == "failed"

    def test_convergence_steps_are_decreasing(self):
        """Test: Vorgabeschritte für die Konvergenzschätzung"""
        for steps in (RESIDUAL_STEPS, CONVERGENCE_STEPS):
            assert len(steps) >= 3
            assert list(steps) == sorted(steps, reverse=True)
        assert RESIDUAL_STEPS == (4e-3, 2e-3, 1e-3)

    def test_convergence_vanishing_residual(self, preset_config):
        """Test: fig2 mit nahezu exaktem Residuum besteht"""
        report = run_verification_suite(preset_config("fig2"), suites=["convergence"])
        suite = report["suites"]["convergence"]
        assert suite["status"] == "passed", suite
        assert suite["attempts"][0]["steps"] == list(RESIDUAL_STEPS)
        assert suite["attempts"][-1]["passed"]

    @pytest.mark.parametrize("name", preset_names())
    def test_identity_suites_all_presets(self, name, preset_config):
        """Test: Keine Prüfung außer dem Residuum schlägt bei einem Preset fehl"""
        suites = ["consistency", "dressing", "reduction", "series"]
        report = run_verification_suite(preset_config(name), suites=suites)
        statuses = {suite: report["suites"][suite]["status"] for suite in suites}
        assert all(status in ("passed", "skipped") for status in statuses.values()), statuses
        assert report["passed"]

    def test_unknown_suite(self, preset_config):
        """Test: Unbekannte Prüfung"""
        with pytest.raises(ValueError):
            run_verification_suite(preset_config("fig3"), suites=["nonsense"])
