# -*- coding: utf-8 -*-
"""
analysis/asymptotics.py
Asymptotik des Ein-Solitons (N = 1, b = a*, d = c*) für t -> +-oo.

Entlang x + V t = const mit V = 4(3 k_R^2 - k_I^2) verhält sich |q| wie
amplitude * sech(-2 k_I (x + V t) + delta). Welcher der beiden Zweige
("B": E' -> 0, "A": E' -> oo) in der Zukunft liegt, hängt vom Vorzeichen
von k_I * V ab.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Callable, Dict, Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from core.config_manager import worker_count
from core.exceptions import BothZero, ConfigurationError, WrongCase
from core.logging_config import get_logger
from core.soliton_engine import evaluate, one_soliton_determinant
from core.spectral_config import SpectralConfiguration, validate_config

logger = get_logger(__name__)

PAST = "past"
FUTURE = "future"

# Umrechnung auf die alternative Normierung B_printed / A_printed
PRINTED_FACTOR = math.sqrt(2.0)

FIT_SAMPLES = 401
EQUALITY_TOLERANCE = 1e-12


class CaseTag(Enum):
    """Fallunterscheidung nach den Amplituden a1 und c1."""
    CASE1 = "case1"   # a1 = 0, c1 != 0
    CASE2 = "case2"   # a1 != 0, c1 = 0
    CASE3 = "case3"   # beide ungleich 0


def classify_case(a1: complex, c1: complex) -> CaseTag:
    """
    Raises:
        BothZero: wenn a1 = c1 = 0
    """
    if a1 == 0 and c1 == 0:
        raise BothZero("a1 und c1 dürfen nicht beide 0 sein", {"a1": [0.0, 0.0], "c1": [0.0, 0.0]})
    if a1 == 0:
        return CaseTag.CASE1
    if c1 == 0:
        return CaseTag.CASE2
    return CaseTag.CASE3


def collision_parameters(a1: complex, c1: complex) -> Tuple[float, float]:
    """Delta1 = |a1|^2 + |c1|^2, Delta2 = a1* c1 + c1* a1 (reell)."""
    a1, c1 = complex(a1), complex(c1)
    return abs(a1) ** 2 + abs(c1) ** 2, 2.0 * (a1.conjugate() * c1).real


def frame_velocity(k: complex) -> float:
    """V = 4(3 k_R^2 - k_I^2); das Soliton läuft mit dx/dt = -V."""
    return 4.0 * (3.0 * k.real ** 2 - k.imag ** 2)


def b_regime_direction(k: complex) -> str:
    """Zeitrichtung, in der E' = exp(2 Re theta(-x,t,k)) im k-Rahmen gegen 0 geht."""
    velocity = frame_velocity(k)
    if velocity == 0:
        logger.warning(f"k={k}: Rahmengeschwindigkeit 0, beide Zweige fallen nicht zeitlich auseinander")
        return FUTURE
    return FUTURE if k.imag * velocity > 0 else PAST


@dataclass
class AsymptoticProfile:
    """sech-Profil eines Zweigs; Zentrum bei x = -velocity_frame * t + position_offset."""
    amplitude: float
    velocity: float
    width_rate: float
    position_offset: float
    direction: str
    delta: float
    branch: str
    amplitude_printed: float

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)


@dataclass
class CollisionReport:
    """Amplituden vor/nach dem Zusammenstoß und das Gleichheitskriterium."""
    B: float
    A: float
    B_printed: float
    A_printed: float
    equal: bool
    criterion_left: complex
    criterion_right: complex
    case: CaseTag
    b_direction: str

    def to_dict(self) -> Dict[str, object]:
        return {
            "B": self.B,
            "A": self.A,
            "B_printed": self.B_printed,
            "A_printed": self.A_printed,
            "equal": self.equal,
            "criterion_left": [self.criterion_left.real, self.criterion_left.imag],
            "criterion_right": [self.criterion_right.real, self.criterion_right.imag],
            "case": self.case.value,
            "b_direction": self.b_direction,
        }


def _one_soliton_data(cfg: SpectralConfiguration) -> Tuple[complex, complex, complex]:
    cfg = cfg if cfg.validated else validate_config(cfg)
    if cfg.n_poles != 1 or not cfg.is_simple:
        raise ConfigurationError("Asymptotik ist nur für N=1 mit Ordnung 1 definiert", {"N": cfg.n_poles})
    # prüft zugleich b = a*, d = c*
    one_soliton_determinant(cfg, 0.0, 0.0)
    a, _, c, _ = cfg.amplitudes(0)
    return a, c, cfg.poles[0].k


def _branch_values(a: complex, c: complex, k: complex) -> Dict[str, Tuple[float, float]]:
    """(Amplitude, delta) der Zweige B und A."""
    delta1, delta2 = collision_parameters(a, c)
    kr, ki = k.real, k.imag
    scale = math.sqrt(2.0) * abs(ki)

    amplitude_b = scale * abs(a) / math.sqrt(delta1)
    delta_b = 0.5 * math.log(2.0 * delta1 * kr ** 2 / abs(k) ** 2)

    mixed = abs(delta1 * a * kr + 1j * delta2 * c * ki)
    amplitude_a = scale * mixed / (math.sqrt(delta1 ** 2 * kr ** 2 + delta2 ** 2 * ki ** 2) * math.sqrt(delta1))
    delta_a = 0.5 * math.log(2.0 * (delta1 + delta2 ** 2 * ki ** 2 / (delta1 * kr ** 2)))
    return {"B": (amplitude_b, delta_b), "A": (amplitude_a, delta_a)}


def asymptotic_profile(cfg: SpectralConfiguration, direction: str) -> AsymptoticProfile:
    """
    sech-Profil für t -> -oo ("past") oder t -> +oo ("future").

    Fall 1 (a1 = 0) liefert in beiden Richtungen Amplitude 0.

    Raises:
        ValueError: unbekannte Richtung
        BothZero, ConventionViolation
    """
    if direction not in (PAST, FUTURE):
        raise ValueError(f"Richtung muss '{PAST}' oder '{FUTURE}' sein, ist {direction!r}")
    a, c, k = _one_soliton_data(cfg)
    classify_case(a, c)

    branch = "B" if b_regime_direction(k) == direction else "A"
    amplitude, delta = _branch_values(a, c, k)[branch]
    return AsymptoticProfile(
        amplitude=amplitude,
        velocity=-frame_velocity(k),
        width_rate=2.0 * abs(k.imag),
        position_offset=delta / (2.0 * k.imag),
        direction=direction,
        delta=delta,
        branch=branch,
        amplitude_printed=PRINTED_FACTOR * amplitude,
    )


def collision_amplitudes(cfg: SpectralConfiguration) -> CollisionReport:
    """
    Amplituden B (Zweig E' -> 0) und A (Zweig E' -> oo) samt Kriterium:
    gleich genau dann, wenn Delta2 = 0 oder
    Delta2 (|a1|^2 - |c1|^2) k_I = i (a1* c1 - a1 c1*) Delta1 k_R.
    """
    a, c, k = _one_soliton_data(cfg)
    case = classify_case(a, c)
    delta1, delta2 = collision_parameters(a, c)
    values = _branch_values(a, c, k)
    amplitude_b, amplitude_a = values["B"][0], values["A"][0]

    left = complex(delta2 * (abs(a) ** 2 - abs(c) ** 2) * k.imag)
    right = complex(1j * (a.conjugate() * c - a * c.conjugate()) * delta1 * k.real)
    scale = max(1.0, abs(left), abs(right))
    equal = abs(delta2) <= EQUALITY_TOLERANCE * delta1 or abs(left - right) <= EQUALITY_TOLERANCE * scale

    if case == CaseTag.CASE2:
        equal = True

    logger.debug(f"Kollision: B={amplitude_b:.6g}, A={amplitude_a:.6g}, gleich={equal}")
    return CollisionReport(
        B=amplitude_b,
        A=amplitude_a,
        B_printed=PRINTED_FACTOR * amplitude_b,
        A_printed=PRINTED_FACTOR * amplitude_a,
        equal=equal,
        criterion_left=left,
        criterion_right=right,
        case=case,
        b_direction=b_regime_direction(k),
    )


def position_shift(cfg: SpectralConfiguration) -> float:
    """
    delta_future - delta_past (vorzeichenbehaftet).

    Raises:
        WrongCase: für Fall 1 (kein Soliton im k-Rahmen)
    """
    a, c, _ = _one_soliton_data(cfg)
    if classify_case(a, c) == CaseTag.CASE1:
        raise WrongCase("Fall 1 hat keine Positionsverschiebung", {"case": CaseTag.CASE1.value})
    return asymptotic_profile(cfg, FUTURE).delta - asymptotic_profile(cfg, PAST).delta


# --- Numerische Anpassung ---

@dataclass
class FrameFit:
    """Ergebnis der Maximumsuche im k-Rahmen."""
    t: float
    amplitude: float
    x_peak: float
    delta: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def fit_frame_amplitude(field: Callable[[float, float], complex], t: float, k: complex,
                        half_width: Optional[float] = None, samples: int = FIT_SAMPLES) -> FrameFit:
    """
    Maximum von |q(., t)| im Fenster um x_c = -V t.

    Das Fenster hat die halbe Breite 10/|k_I| (20 Breiten des sech-Profils);
    das Maximum der Abtastwerte wird per Goldener-Schnitt-Suche verfeinert.
    """
    k = complex(k)
    velocity = frame_velocity(k)
    half_width = 10.0 / abs(k.imag) if half_width is None else half_width
    center = -velocity * t

    xs = np.linspace(center - half_width, center + half_width, samples)
    values = np.array([abs(field(float(x), t)) for x in xs])
    values = np.where(np.isfinite(values), values, 0.0)
    index = int(np.argmax(values))
    x_peak, amplitude = float(xs[index]), float(values[index])

    if 0 < index < samples - 1 and amplitude > 0:
        try:
            result = minimize_scalar(
                lambda x: -abs(field(float(x), t)),
                bracket=(xs[index - 1], xs[index], xs[index + 1]),
                method="golden",
                options={"xtol": 1e-10},
            )
            if -result.fun >= amplitude:
                x_peak, amplitude = float(result.x), float(-result.fun)
        except ValueError as e:
            # flaches Maximum, Abtastwert bleibt
            logger.debug(f"Goldener Schnitt nicht anwendbar bei t={t}: {e}")

    return FrameFit(t=float(t), amplitude=amplitude, x_peak=x_peak, delta=2.0 * k.imag * (x_peak + velocity * t))


def fitted_profiles(cfg: SpectralConfiguration, t_fit: float = 30.0,
                    field: Optional[Callable[[float, float], complex]] = None) -> Dict[str, FrameFit]:
    """Anpassung bei t = -t_fit ("past") und t = +t_fit ("future")."""
    cfg = cfg if cfg.validated else validate_config(cfg)
    k = cfg.poles[0].k
    if field is None:
        def field(x, t):
            return evaluate(cfg, x, t).q

    with ThreadPoolExecutor(max_workers=min(2, worker_count())) as pool:
        past = pool.submit(fit_frame_amplitude, field, -t_fit, k)
        future = pool.submit(fit_frame_amplitude, field, t_fit, k)
        fits = {PAST: past.result(), FUTURE: future.result()}

    logger.info(
        f"Anpassung bei t=+-{t_fit}: past={fits[PAST].amplitude:.6g}, future={fits[FUTURE].amplitude:.6g}"
    )
    return fits
