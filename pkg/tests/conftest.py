# -*- coding: utf-8 -*-
"""
pytest Fixtures und Konfiguration für alle Tests
"""
import pytest
import sys
import tempfile
from pathlib import Path

import numpy as np

# Füge Projekt-Root zum Python-Path hinzu
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from analysis.figure_presets import figure_preset
from core.spectral_config import PoleDatum, SpectralConfiguration, validate_config


@pytest.fixture
def temp_dir():
    """Erstellt ein temporäres Verzeichnis für Tests"""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def temp_config_file(temp_dir):
    """Erstellt eine temporäre Konfigurationsdatei"""
    config_file = temp_dir / "test_config.json"
    yield config_file
    # Cleanup wird automatisch durch temp_dir gemacht


@pytest.fixture
def sample_settings_data():
    """Gibt Beispiel-Einstellungen zurück"""
    return {
        "residual_step": 2e-3,
        "residual_points": 5,
        "seed": 7,
        "identity_tolerance": 1e-8,
        "threads": 2,
    }


@pytest.fixture
def preset_config():
    """Liefert die validierte Konfiguration eines Presets."""
    def _load(name):
        return figure_preset(name).config
    return _load


@pytest.fixture
def random_simple_config():
    """
    Zufällige Konfiguration mit einfachen Polen (Exponentenkodierung, fester Seed).

    Pole liegen im ersten Quadranten mit Abstand zueinander.
    """
    def _build(seed=0, n_poles=2):
        rng = np.random.default_rng(seed)
        poles = []
        for index in range(n_poles):
            k = complex(0.3 + 0.4 * index + 0.2 * rng.random(), 0.4 + 0.3 * rng.random())
            coefficients = [
                (complex(rng.normal(scale=0.5), rng.normal(scale=0.5)),) for _ in range(4)
            ]
            poles.append(PoleDatum(k, 1, *coefficients))
        return validate_config(SpectralConfiguration(tuple(poles)))
    return _build


@pytest.fixture
def second_order_config():
    """Ein Pol zweiter Ordnung mit nichttrivialen Koeffizienten erster Ordnung."""
    return validate_config(SpectralConfiguration((
        PoleDatum(0.4 + 0.9j, 2, (0.1, 0.3 - 0.2j), (0.1, 0.3 + 0.2j), (-0.2j, 0.5), (0.2j, 0.5)),
    )))
