# -*- coding: utf-8 -*-
"""
Unit Tests für die Figuren-Presets
"""
import pytest

from analysis.figure_presets import figure_preset, preset_names, preset_spec_document
from core.exceptions import DuplicatePole, UnknownPreset
from core.spectral_config import PoleDatum, SpectralConfiguration, parse_spec, validate_config


class TestFigurePresets:
    """Test-Suite für figure_preset"""

    def test_names(self):
        """Test: fig1 ... fig15"""
        assert preset_names() == [f"fig{i}" for i in range(1, 16)]

    @pytest.mark.parametrize("name", [f"fig{i}" for i in range(1, 11)])
    def test_raw_presets(self, name):
        """Test: fig1-fig10 mit Rohamplituden und Ordnung 1"""
        cfg = figure_preset(name).config
        assert cfg.raw_amplitude_mode
        assert cfg.is_simple
        assert cfg.validated

    @pytest.mark.parametrize("name", [f"fig{i}" for i in range(11, 16)])
    def test_exponent_presets(self, name):
        """Test: fig11-fig15 mit Exponenten und hoher Ordnung"""
        cfg = figure_preset(name).config
        assert not cfg.raw_amplitude_mode
        assert not cfg.is_simple

    def test_total_orders(self):
        """Test: Gesamtordnung der Hochordnungs-Presets"""
        assert figure_preset("fig11").config.total_order == 2
        assert figure_preset("fig14").config.total_order == 3
        assert figure_preset("fig14").config.n_poles == 2

    def test_unknown(self):
        """Test: Unbekannter Name"""
        with pytest.raises(UnknownPreset) as info:
            figure_preset("fig16")
        assert "fig1" in info.value.details["available"]

    def test_digest(self):
        """Test: SHA-256 über die kanonische Serialisierung"""
        digest = figure_preset("fig3").digest
        assert len(digest) == 64
        assert all(ch in "0123456789abcdef" for ch in digest)
        assert digest == figure_preset("fig3").digest
        assert digest != figure_preset("fig4").digest

    def test_identical_data_share_digest(self):
        """Test: fig8 verwendet die Daten von fig5"""
        assert figure_preset("fig8").digest == figure_preset("fig5").digest
        assert figure_preset("fig8").grid != figure_preset("fig5").grid

    @pytest.mark.parametrize("name", ["fig2", "fig7", "fig13", "fig15"])
    def test_spec_document_round_trip(self, name):
        """Test: Spec-Dokument ergibt wieder dieselbe Konfiguration"""
        assert validate_config(parse_spec(preset_spec_document(name))) == figure_preset(name).config

    def test_mirrored_second_pole_rejected(self):
        """Test: Zweiter Pol -k1 ist kein gültiges N=2 (daher fig6 als N=1)"""
        first = PoleDatum(0.5 + 0.5j, 1, (1,), (0,), (0,), (0,))
        second = PoleDatum(-0.5 - 0.5j, 1, (1,), (0,), (0,), (0,))
        with pytest.raises(DuplicatePole):
            validate_config(SpectralConfiguration((first, second), raw_amplitude_mode=True))
        assert figure_preset("fig6").config.n_poles == 1

    def test_windows(self):
        """Test: Darstellungsfenster"""
        grid = figure_preset("fig2").grid
        assert (grid.t_min, grid.t_max) == (-0.5, 0.5)
        assert (grid.x_min, grid.x_max, grid.nx) == (-10.0, 10.0, 201)
        assert figure_preset("fig6").grid.t_max == 2.0
