# -*- coding: utf-8 -*-
"""
analysis/figure_presets.py
Vordefinierte Streudaten (fig1 ... fig15) mit passendem Darstellungsfenster.

fig1-fig10 verwenden Rohamplituden, fig11-fig15 die Exponentenkodierung.
Fehlende b, d werden nach der Konvention b = a*, d = c* ergänzt.
"""
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Sequence

from analysis.grid_sampler import GridSpec
from core.exceptions import UnknownPreset
from core.spectral_config import (
    PoleDatum,
    SpectralConfiguration,
    config_digest,
    dump_spec,
    spec_bytes,
    validate_config,
)

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class FigurePreset:
    name: str
    config: SpectralConfiguration
    grid: GridSpec
    note: str = ""

    @property
    def digest(self) -> str:
        return config_digest(spec_bytes(self.config))


def _window(t_half: float = 5.0) -> GridSpec:
    return GridSpec(-10.0, 10.0, 201, -t_half, t_half, 101)


def _raw(k: complex, a: complex, b: complex, c: complex, d: complex) -> PoleDatum:
    return PoleDatum(k, 1, (a,), (b,), (c,), (d,))


def _exponent(k: complex, order: int, a: Sequence[complex], b: Sequence[complex],
              c: Sequence[complex], d: Sequence[complex]) -> PoleDatum:
    return PoleDatum(k, order, tuple(a), tuple(b), tuple(c), tuple(d))


def _raw_config(*poles: PoleDatum) -> SpectralConfiguration:
    return validate_config(SpectralConfiguration(poles, raw_amplitude_mode=True))


def _exponent_config(*poles: PoleDatum) -> SpectralConfiguration:
    return validate_config(SpectralConfiguration(poles, raw_amplitude_mode=False))


def _fig1():
    return _raw_config(_raw(0.01 + 0.5j, 0, 0, 1, 1)), _window(), "b=a*, d=c* ergänzt; Fall 1"


def _fig2():
    return _raw_config(_raw(1.6 + 1j, 1, 1, 0, 0)), _window(0.5), "b=a*, d=c* ergänzt; Fall 2"


def _fig3():
    a, c = 0.5j, SQRT3 / 2 * 1j
    return _raw_config(_raw(0.1 + 1j, a, a.conjugate(), c, c.conjugate())), _window(), "b=a*, d=c* ergänzt; Fall 3"


def _fig4():
    a, c = 0.5j, SQRT3 / 2 * 1j
    return _raw_config(_raw(0.5 + 0.5j, a, a.conjugate(), c, c.conjugate())), _window(), "Daten wie fig3, anderes k"


def _fig5():
    return _raw_config(_raw(0.5 + 0.5j, 1, 1, 1, 1)), _window(), "b=a*, d=c* ergänzt; A = B"


def _fig6():
    note = "N=1-Äquivalent: der zweite Pol wäre -k1 und fällt mit dem Spiegelpol zusammen"
    return _raw_config(_raw(0.5 + 0.5j, 1, 0, 0, 0)), _window(2.0), note


def _fig7():
    return _raw_config(_raw(0.4 + 0.5j, 1, 0, 0, 0), _raw(0.7 + 0.8j, 1, 0, 1, 0)), _window(), ""


def _fig8():
    note = "N=1-Äquivalent mit den Daten des ersten Pols (identisch zu fig5, kürzeres Zeitfenster)"
    return _raw_config(_raw(0.5 + 0.5j, 1, 1, 1, 1)), _window(2.0), note


def _fig9():
    return _raw_config(
        _raw(0.3 + 0.4j, 1, 1, 1 + 1j, 1 - 1j),
        _raw(0.5 + 0.5j, 1j, -1j, 0.5j, -0.5j),
    ), _window(), ""


def _fig10():
    return _raw_config(
        _raw(1.2 + 0.4j, SQRT2, SQRT2, SQRT2 * 1j, -SQRT2 * 1j),
        _raw(0.5 + 0.5j, 1j, -1j, 1, 1),
    ), _window(), ""


def _fig11():
    zero = (0, 0)
    return _exponent_config(_exponent(0.3 + 1j, 2, zero, zero, zero, zero)), _window(), "zweite Ordnung"


def _fig12():
    values = (-1.5, 0)
    return _exponent_config(_exponent(0.3 + 1j, 2, values, values, values, values)), _window(), "zweite Ordnung"


def _fig13():
    ac, bd = (-1 + 1j, 0), (-1, 0)
    return _exponent_config(_exponent(0.4 + 1j, 2, ac, bd, ac, bd)), _window(), "zweite Ordnung"


def _fig14():
    first, second = (-1, 0), (0,)
    return _exponent_config(
        _exponent(0.3 + 1j, 2, first, first, first, first),
        _exponent(1 + 1j, 1, second, second, second, second),
    ), _window(), "dritte Ordnung, N=2"


def _fig15():
    first, second = (-1, 0), (-1,)
    return _exponent_config(
        _exponent(0.5 + 1.2j, 2, first, first, first, first),
        _exponent(0.6 + 1.2j, 1, second, second, second, second),
    ), _window(), "dritte Ordnung, N=2"


_BUILDERS: Dict[str, Callable[[], Any]] = {
    "fig1": _fig1, "fig2": _fig2, "fig3": _fig3, "fig4": _fig4, "fig5": _fig5,
    "fig6": _fig6, "fig7": _fig7, "fig8": _fig8, "fig9": _fig9, "fig10": _fig10,
    "fig11": _fig11, "fig12": _fig12, "fig13": _fig13, "fig14": _fig14, "fig15": _fig15,
}


def preset_names() -> List[str]:
    return list(_BUILDERS)


def figure_preset(name: str) -> FigurePreset:
    """
    Raises:
        UnknownPreset: wenn name nicht fig1 ... fig15 ist
    """
    builder = _BUILDERS.get(name)
    if builder is None:
        raise UnknownPreset(f"Unbekanntes Preset '{name}'", {"name": name, "available": preset_names()})
    config, grid, note = builder()
    return FigurePreset(name=name, config=config, grid=grid, note=note)


def preset_spec_document(name: str) -> Dict[str, Any]:
    """Spec-Dokument (wie von load_spec_file gelesen) für ein Preset."""
    return dump_spec(figure_preset(name).config)
