# -*- coding: utf-8 -*-
"""
Input-Validatoren für die ngSS-Bibliothek.
Zentrale Validierungslogik für Streudaten (Pole, Koeffizienten) und Gitter.
"""
import logging
import math
from typing import Any, Sequence

from core.exceptions import (
    DuplicatePole,
    GridSpecError,
    InvalidSigma,
    NonFinite,
    PoleOutsideDPlus,
    RawModeOrderError,
    ShortCoefficients,
    SpecFormatError,
)

logger = logging.getLogger("NgssSolitons.Validators")


def _finite(value: complex) -> bool:
    return math.isfinite(value.real) and math.isfinite(value.imag)


class SpectralConfigValidator:
    """Validator für diskrete Streudaten."""

    # Pole gelten als gleich, wenn sie relativ näher als dieser Wert liegen
    DUPLICATE_TOLERANCE = 1e-12

    COEFFICIENT_NAMES = ("a", "b", "c", "d")

    @classmethod
    def validate_sigma(cls, sigma: Any) -> int:
        """
        Nur sigma = 1 wird unterstützt.

        Raises:
            InvalidSigma: bei jedem anderen Wert
        """
        if isinstance(sigma, bool) or sigma != 1:
            logger.warning(f"sigma={sigma!r} wird nicht unterstützt")
            raise InvalidSigma(f"sigma muss 1 sein, ist {sigma!r}", {"sigma": repr(sigma)})
        return 1

    @classmethod
    def validate_pole(cls, index: int, pole: Any, raw_amplitude_mode: bool) -> None:
        """
        Prüft einen einzelnen Pol.

        Args:
            index: Position des Pols (nullbasiert, für Meldungen)
            pole: PoleDatum
            raw_amplitude_mode: Rohamplituden statt Exponenten

        Raises:
            SpecFormatError, NonFinite, PoleOutsideDPlus, ShortCoefficients, RawModeOrderError
        """
        details = {"pole": index}
        if isinstance(pole.order, bool) or not isinstance(pole.order, int) or pole.order < 1:
            logger.warning(f"Pol {index}: ungültige Ordnung {pole.order!r}")
            raise SpecFormatError(f"Pol {index}: Ordnung muss eine positive Ganzzahl sein", details)

        if not _finite(pole.k):
            logger.warning(f"Pol {index}: k={pole.k} ist nicht endlich")
            raise NonFinite(f"Pol {index}: k ist nicht endlich", details)

        if pole.k.real * pole.k.imag <= 0:
            logger.warning(f"Pol {index}: k={pole.k} liegt nicht in D+")
            raise PoleOutsideDPlus(
                f"Pol {index}: k={pole.k} erfüllt nicht Re(k)*Im(k) > 0",
                {"pole": index, "k": [pole.k.real, pole.k.imag]},
            )

        if raw_amplitude_mode and pole.order != 1:
            raise RawModeOrderError(
                f"Pol {index}: Rohamplituden erfordern Ordnung 1, ist {pole.order}", details
            )

        for name in cls.COEFFICIENT_NAMES:
            values = pole.coefficients(name)
            if len(values) < pole.order:
                logger.warning(f"Pol {index}: Koeffizienten {name} zu kurz ({len(values)} < {pole.order})")
                raise ShortCoefficients(
                    f"Pol {index}: Koeffizientenfolge {name} hat Länge {len(values)} < Ordnung {pole.order}",
                    {"pole": index, "coefficient": name, "length": len(values), "order": pole.order},
                )
            if not all(_finite(v) for v in values):
                raise NonFinite(f"Pol {index}: Koeffizienten {name} nicht endlich", {"pole": index, "coefficient": name})

    @classmethod
    def validate_distinct(cls, ks: Sequence[complex]) -> None:
        """
        Die symmetrisch ergänzte Menge {k_i, -k_i} muss 2N verschiedene Elemente haben.

        Raises:
            DuplicatePole
        """
        for i, ki in enumerate(ks):
            for j, kj in enumerate(ks):
                scale = max(1.0, abs(ki), abs(kj))
                if i < j and abs(ki - kj) <= cls.DUPLICATE_TOLERANCE * scale:
                    raise DuplicatePole(f"Pole {i} und {j} sind gleich (k={ki})", {"poles": [i, j], "relation": "equal"})
                if i != j and abs(ki + kj) <= cls.DUPLICATE_TOLERANCE * scale:
                    logger.warning(f"Pol {j} ist das Spiegelbild von Pol {i}")
                    raise DuplicatePole(
                        f"Pol {j} (k={kj}) fällt mit dem Symmetriepol -k von Pol {i} zusammen",
                        {"poles": [i, j], "relation": "negative"},
                    )


class GridSpecValidator:
    """Validator für rechteckige (x, t)-Gitter."""

    @classmethod
    def validate(cls, x_min: float, x_max: float, nx: int, t_min: float, t_max: float, nt: int) -> None:
        """
        Raises:
            GridSpecError: wenn Grenzen oder Punktzahlen ungültig sind
        """
        values = {"x_min": x_min, "x_max": x_max, "t_min": t_min, "t_max": t_max}
        for name, value in values.items():
            if not math.isfinite(value):
                raise GridSpecError(f"{name} ist nicht endlich", {name: repr(value)})
        if not x_min < x_max:
            raise GridSpecError(f"x_min={x_min} muss kleiner als x_max={x_max} sein", values)
        if not t_min < t_max:
            raise GridSpecError(f"t_min={t_min} muss kleiner als t_max={t_max} sein", values)
        for name, count in (("nx", nx), ("nt", nt)):
            if isinstance(count, bool) or not isinstance(count, int) or count < 2:
                raise GridSpecError(f"{name}={count!r} muss eine Ganzzahl >= 2 sein", {name: repr(count)})
