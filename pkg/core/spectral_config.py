# -*- coding: utf-8 -*-
"""
core/spectral_config.py
Diskrete Streudaten: Pole k_l in D+, Polordnungen und Koeffizientenfolgen.

Zwei Kodierungen der Amplituden:
  * raw_amplitude_mode: coeff_a[0] ist die Amplitude a_l selbst (nur Ordnung 1,
    erlaubt a_l = 0),
  * Exponentenkodierung: A_l(eps) = exp(sum_i a_l^[i] eps^i), Amplitude exp(a_l^[0]).

Spec-Datei (JSON):
    {"sigma": 1, "raw_amplitudes": false,
     "poles": [{"k": [re, im], "order": n,
                "a": [[re, im], ...], "b": ..., "c": ..., "d": ...}]}
Unbekannte Schlüssel werden abgelehnt.
"""
import hashlib
import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from core.exceptions import IoFailure, SpecFormatError
from core.logging_config import get_logger
from core.validators import SpectralConfigValidator

logger = get_logger(__name__)

TOP_LEVEL_KEYS = {"sigma", "raw_amplitudes", "poles"}
POLE_KEYS = {"k", "order", "a", "b", "c", "d"}


def _as_complex_tuple(values: Union[Sequence[Any], complex, float]) -> Tuple[complex, ...]:
    if np.isscalar(values):
        return (complex(values),)
    return tuple(complex(v) for v in values)


@dataclass(frozen=True)
class PoleDatum:
    """Ein Pol k in D+ mit Ordnung und Koeffizientenfolgen a, b, c, d."""
    k: complex
    order: int = 1
    coeff_a: Tuple[complex, ...] = (0j,)
    coeff_b: Tuple[complex, ...] = (0j,)
    coeff_c: Tuple[complex, ...] = (0j,)
    coeff_d: Tuple[complex, ...] = (0j,)

    def __post_init__(self):
        object.__setattr__(self, "k", complex(self.k))
        for name in ("coeff_a", "coeff_b", "coeff_c", "coeff_d"):
            object.__setattr__(self, name, _as_complex_tuple(getattr(self, name)))

    def coefficients(self, name: str) -> Tuple[complex, ...]:
        return getattr(self, f"coeff_{name}")

    def exponent_series(self, name: str, length: int) -> Tuple[complex, ...]:
        """Exponentenkoeffizienten, mit Nullen auf 'length' Einträge aufgefüllt."""
        values = self.coefficients(name)[:length]
        return values + (0j,) * (length - len(values))


@dataclass(frozen=True)
class SpectralConfiguration:
    """Vollständige Problembeschreibung; nach validate_config unveränderlich und teilbar."""
    poles: Tuple[PoleDatum, ...]
    sigma: int = 1
    raw_amplitude_mode: bool = False
    validated: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "poles", tuple(self.poles))

    @property
    def n_poles(self) -> int:
        return len(self.poles)

    @property
    def total_order(self) -> int:
        """N0 = Summe der Ordnungen."""
        return sum(p.order for p in self.poles)

    @property
    def max_order(self) -> int:
        return max((p.order for p in self.poles), default=0)

    @property
    def is_simple(self) -> bool:
        return all(p.order == 1 for p in self.poles)

    def amplitudes(self, index: int) -> Tuple[complex, complex, complex, complex]:
        """(a, b, c, d) des Pols 'index' in der gewählten Kodierung."""
        pole = self.poles[index]
        values = tuple(pole.coefficients(name)[0] for name in ("a", "b", "c", "d"))
        if self.raw_amplitude_mode:
            return values
        return tuple(complex(np.exp(v)) for v in values)


@dataclass(frozen=True)
class FullPoleSet:
    """Symmetrisch ergänzte Polmenge: upper = (k_1..k_N, -k_1..-k_N), lower = conj(upper)."""
    upper: Tuple[complex, ...]
    lower: Tuple[complex, ...]
    orders: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.upper)


def validate_config(raw: SpectralConfiguration) -> SpectralConfiguration:
    """
    Prüft alle Invarianten und gibt dieselben Daten als validiert markiert zurück.

    Raises:
        InvalidSigma, SpecFormatError, NonFinite, PoleOutsideDPlus,
        ShortCoefficients, RawModeOrderError, DuplicatePole
    """
    SpectralConfigValidator.validate_sigma(raw.sigma)
    if raw.n_poles < 1:
        raise SpecFormatError("Mindestens ein Pol erforderlich", {"poles": 0})
    for index, pole in enumerate(raw.poles):
        SpectralConfigValidator.validate_pole(index, pole, raw.raw_amplitude_mode)
    SpectralConfigValidator.validate_distinct([p.k for p in raw.poles])

    if raw.validated:
        return raw
    logger.debug(f"Konfiguration validiert: N={raw.n_poles}, N0={raw.total_order}, raw={raw.raw_amplitude_mode}")
    return replace(raw, validated=True)


def derive_full_pole_set(cfg: SpectralConfiguration) -> FullPoleSet:
    """Ergänzt k_{N+i} = -k_i, k_hat_j = conj(k_j), n_{N+i} = n_i."""
    ks = [p.k for p in cfg.poles]
    upper = tuple(ks + [-k for k in ks])
    lower = tuple(k.conjugate() for k in upper)
    orders = tuple([p.order for p in cfg.poles] * 2)
    return FullPoleSet(upper=upper, lower=lower, orders=orders)


def to_exponent_encoding(cfg: SpectralConfiguration) -> Optional[SpectralConfiguration]:
    """
    Kodiert Rohamplituden als Exponenten (Hauptzweig des Logarithmus).

    Returns:
        Neue Konfiguration, cfg selbst wenn bereits exponentiell, oder None
        falls eine Amplitude exakt 0 ist (nicht darstellbar).
    """
    if not cfg.raw_amplitude_mode:
        return cfg
    poles = []
    for pole in cfg.poles:
        values = [pole.coefficients(name)[0] for name in ("a", "b", "c", "d")]
        if any(v == 0 for v in values):
            return None
        logs = [(complex(np.log(v)),) for v in values]
        poles.append(PoleDatum(pole.k, pole.order, *logs))
    return replace(cfg, poles=tuple(poles), raw_amplitude_mode=False, validated=False)


# --- Spec-Datei ---

def _parse_complex(value: Any, where: str) -> complex:
    if (isinstance(value, (list, tuple)) and len(value) == 2
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)):
        return complex(float(value[0]), float(value[1]))
    raise SpecFormatError(f"{where}: erwartet [re, im], gefunden {value!r}", {"where": where})


def parse_spec(document: Dict[str, Any]) -> SpectralConfiguration:
    """
    Baut eine (noch nicht validierte) Konfiguration aus einem Spec-Dokument.

    Raises:
        SpecFormatError: bei unbekannten Schlüsseln oder falschen Typen
    """
    if not isinstance(document, dict):
        raise SpecFormatError("Spec-Dokument muss ein JSON-Objekt sein")
    unknown = sorted(set(document) - TOP_LEVEL_KEYS)
    if unknown:
        raise SpecFormatError(f"Unbekannte Schlüssel: {unknown}", {"unknown_keys": unknown})
    if "poles" not in document or not isinstance(document["poles"], list):
        raise SpecFormatError("'poles' fehlt oder ist keine Liste")

    raw_mode = document.get("raw_amplitudes", False)
    if not isinstance(raw_mode, bool):
        raise SpecFormatError("'raw_amplitudes' muss true/false sein")

    poles: List[PoleDatum] = []
    for index, entry in enumerate(document["poles"]):
        where = f"poles[{index}]"
        if not isinstance(entry, dict):
            raise SpecFormatError(f"{where} muss ein Objekt sein", {"where": where})
        unknown = sorted(set(entry) - POLE_KEYS)
        if unknown:
            raise SpecFormatError(f"{where}: unbekannte Schlüssel {unknown}", {"where": where, "unknown_keys": unknown})
        missing = sorted({"k", "a", "b", "c", "d"} - set(entry))
        if missing:
            raise SpecFormatError(f"{where}: fehlende Schlüssel {missing}", {"where": where, "missing_keys": missing})

        order = entry.get("order", 1)
        coefficients = {}
        for name in ("a", "b", "c", "d"):
            values = entry[name]
            if not isinstance(values, list):
                raise SpecFormatError(f"{where}.{name} muss eine Liste sein", {"where": where})
            coefficients[name] = tuple(_parse_complex(v, f"{where}.{name}") for v in values)

        poles.append(PoleDatum(
            k=_parse_complex(entry["k"], f"{where}.k"),
            order=order,
            coeff_a=coefficients["a"],
            coeff_b=coefficients["b"],
            coeff_c=coefficients["c"],
            coeff_d=coefficients["d"],
        ))

    return SpectralConfiguration(poles=tuple(poles), sigma=document.get("sigma", 1), raw_amplitude_mode=raw_mode)


def dump_spec(cfg: SpectralConfiguration) -> Dict[str, Any]:
    """Gegenstück zu parse_spec."""
    def pair(z: complex) -> List[float]:
        return [float(z.real), float(z.imag)]

    return {
        "sigma": cfg.sigma,
        "raw_amplitudes": cfg.raw_amplitude_mode,
        "poles": [
            {
                "k": pair(p.k),
                "order": p.order,
                "a": [pair(v) for v in p.coeff_a],
                "b": [pair(v) for v in p.coeff_b],
                "c": [pair(v) for v in p.coeff_c],
                "d": [pair(v) for v in p.coeff_d],
            }
            for p in cfg.poles
        ],
    }


def spec_bytes(cfg: SpectralConfiguration) -> bytes:
    """Kanonische JSON-Serialisierung (Grundlage des Digests für Presets)."""
    return json.dumps(dump_spec(cfg), sort_keys=True, separators=(",", ":")).encode("utf-8")


def config_digest(data: bytes) -> str:
    """SHA-256-Prüfsumme des Spec-Inhalts."""
    return hashlib.sha256(data).hexdigest()


def load_spec_file(path: Union[str, Path]) -> Tuple[SpectralConfiguration, str]:
    """
    Lädt und validiert eine Spec-Datei.

    Returns:
        (validierte Konfiguration, SHA-256 der Dateibytes)

    Raises:
        IoFailure: Datei nicht lesbar
        SpecFormatError: kein gültiges JSON / Schema verletzt
        ConfigurationError: Invarianten verletzt
    """
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        logger.error(f"Spec-Datei {path} nicht lesbar: {e}")
        raise IoFailure(f"Spec-Datei {path} nicht lesbar: {e}", {"path": str(path)}) from e
    try:
        document = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise SpecFormatError(f"Spec-Datei {path} ist kein gültiges JSON: {e}", {"path": str(path)}) from e

    cfg = validate_config(parse_spec(document))
    logger.info(f"Spec {path.name} geladen: N={cfg.n_poles}, N0={cfg.total_order}")
    return cfg, config_digest(data)
