# -*- coding: utf-8 -*-
"""
core/soliton_engine.py
Auswertung der reflexionslosen Lösungen q(x, t) der nichtlokalen
verallgemeinerten Sasa-Satsuma-Gleichung.

Einfache Pole:   q = -2i det H / det M = 2i * chi M^-1 omega
Hohe Ordnung:    q = 2i * chi_1 M^-1 chi_hat_5 (Block-Matrix aus Taylor-Koeffizienten)

Alle Eigenvektoren werden durch s_l = exp(|Re theta_l|) geteilt. Dadurch
ist M = D M~ D mit D = diag(s); q, P1, P2 und P1^[1] sind invariant, und
große |x|, |t| laufen nicht über.

Indizes sind nullbasiert: Pol l < N ist k_l, Pol N + l ist das Spiegelbild -k_l.
"""
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from core.bivariate_series import BivariateSeries, series_recip_affine
from core.config_manager import DEFAULT_SETTINGS
from core.dense_lu import LuDecomposition, factorize
from core.exceptions import (
    ConfigurationError,
    ConventionViolation,
    PoleEvaluation,
    SingularAssembly,
)
from core.logging_config import get_logger
from core.spectral_config import (
    FullPoleSet,
    SpectralConfiguration,
    derive_full_pole_set,
    validate_config,
)

logger = get_logger(__name__)

SIGMA3 = np.diag([1, 1, 1, 1, -1]).astype(complex)

# Vertauscht Komponenten 1<->3, 2<->4 und negiert die fünfte
LAMBDA = np.array(
    [
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 0, 0, -1],
    ],
    dtype=complex,
)

SINGULAR_THRESHOLD = DEFAULT_SETTINGS["singular_threshold"]
POLE_TOLERANCE = 1e-14

# Reihenfolge der Amplituden in U_l bzw. im gespiegelten U_{N+l}
_DIRECT_ORDER = ("a", "b", "c", "d")
_REFLECTED_ORDER = ("c", "d", "a", "b")


def _ensure_valid(cfg: SpectralConfiguration) -> SpectralConfiguration:
    return cfg if cfg.validated else validate_config(cfg)


# --- Phasen ---

def phase(x: float, t: float, k: complex) -> complex:
    """theta(x, t, k) = i k x + 4 i k^3 t"""
    k = complex(k)
    return 1j * k * x + 4j * k ** 3 * t


def phase_series(x: float, t: float, k: complex, max_eps: int, max_hat: int = 0) -> BivariateSeries:
    """
    Taylor-Reihe von eps -> theta(x, t, k + eps).

    Die Reihe bricht nach eps**3 ab:
    theta + (ix + 12ik^2 t) eps + 12ikt eps^2 + 4it eps^3.
    """
    k = complex(k)
    coefficients = [phase(x, t, k), 1j * x + 12j * k ** 2 * t, 12j * k * t, 4j * t]
    return BivariateSeries.eps_polynomial(coefficients, max_eps, max_hat)


# --- Eigenvektoren ---

@dataclass
class EigenvectorPair:
    """
    U[l] sind die Spaltenvektoren U_l, Uhat[l] die Zeilenvektoren U_l^dagger
    (jeweils als Zeilen eines (2N, 5)-Arrays abgelegt).
    Bei normalisierten Vektoren ist U_l = exp(log_scale[l]) * U[l].
    """
    U: np.ndarray
    Uhat: np.ndarray
    log_scale: np.ndarray
    poles: FullPoleSet

    @property
    def normalized(self) -> bool:
        return bool(np.any(self.log_scale != 0))


def _split_phase(theta: np.ndarray, normalized: bool) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(exp(theta - s), exp(-theta - s), s) mit s = |Re theta| bzw. 0."""
    theta = np.asarray(theta, dtype=complex)
    s = np.abs(theta.real) if normalized else np.zeros(theta.shape)
    return np.exp(theta - s), np.exp(-theta - s), s


def _amplitude_table(cfg: SpectralConfiguration) -> np.ndarray:
    return np.array([cfg.amplitudes(l) for l in range(cfg.n_poles)], dtype=complex).reshape(cfg.n_poles, 4)


def eigenvectors_simple(cfg: SpectralConfiguration, x: float, t: float, normalized: bool = False) -> EigenvectorPair:
    """
    U_l = exp(theta(x,t,k_l) sigma3) U_l0 und U_{N+l} = Lambda exp(theta(-x,t,k_l) sigma3) U_l0
    mit U_l0 = (a_l, b_l, c_l, d_l, 1)^T; Uhat_l = U_l^dagger.
    """
    cfg = _ensure_valid(cfg)
    if not cfg.is_simple:
        raise ConfigurationError("eigenvectors_simple erfordert Pole erster Ordnung", {"max_order": cfg.max_order})

    ks = np.array([p.k for p in cfg.poles])
    amps = _amplitude_table(cfg)
    ep, em, s = _split_phase(np.array([phase(x, t, k) for k in ks]), normalized)
    fp, fm, sr = _split_phase(np.array([phase(-x, t, k) for k in ks]), normalized)

    direct = np.column_stack([amps * ep[:, None], em])
    reflected = np.column_stack([amps[:, [2, 3, 0, 1]] * fp[:, None], -fm])
    U = np.vstack([direct, reflected])
    return EigenvectorPair(
        U=U,
        Uhat=U.conj(),
        log_scale=np.concatenate([s, sr]),
        poles=derive_full_pole_set(cfg),
    )


def perturbed_eigenvectors(cfg: SpectralConfiguration, index: int, x: float, t: float,
                           eps: complex, eps_hat: complex) -> Tuple[np.ndarray, np.ndarray]:
    """
    Punktweise Auswertung von U_index(eps) und Uhat_index(eps_hat) (unskaliert).

    Dient als unabhängiger Vergleich für die Taylor-Koeffizienten aus kernel_series.
    """
    cfg = _ensure_valid(cfg)
    n = cfg.n_poles
    pole = cfg.poles[index % n]
    reflected = index >= n
    xx = -x if reflected else x

    theta = phase(xx, t, pole.k + eps)
    psi = phase(xx, t, pole.k.conjugate() + eps_hat)
    names = _REFLECTED_ORDER if reflected else _DIRECT_ORDER
    sign = -1.0 if reflected else 1.0

    if cfg.raw_amplitude_mode:
        amplitude = {name: pole.coefficients(name)[0] for name in _DIRECT_ORDER}
        amplitude_hat = {name: value.conjugate() for name, value in amplitude.items()}
    else:
        amplitude = {
            name: np.exp(np.polyval(np.array(pole.coefficients(name))[::-1], eps)) for name in _DIRECT_ORDER
        }
        amplitude_hat = {
            name: np.exp(np.polyval(np.conj(np.array(pole.coefficients(name)))[::-1], eps_hat))
            for name in _DIRECT_ORDER
        }

    U = np.array([amplitude[name] * np.exp(theta) for name in names] + [sign * np.exp(-theta)], dtype=complex)
    Uhat = np.array([amplitude_hat[name] * np.exp(-psi) for name in names] + [sign * np.exp(psi)], dtype=complex)
    return U, Uhat


def _eigenvector_taylor(cfg: SpectralConfiguration, index: int, x: float, t: float,
                        length: int, hat: bool, normalized: bool) -> Tuple[np.ndarray, float]:
    """
    Taylor-Koeffizienten (5, length) von U_index(eps) bzw. Uhat_index(eps_hat).

    Returns:
        (Koeffizienten, Skalenexponent s), Koeffizienten bereits durch exp(s) geteilt
    """
    n = cfg.n_poles
    pole = cfg.poles[index % n]
    reflected = index >= n
    xx = -x if reflected else x
    order = length - 1

    if hat:
        # Uhat: (A^ e^-psi, ..., e^psi) mit psi = theta(x, t, conj(k) + eps_hat)
        exponent = -phase_series(xx, t, pole.k.conjugate(), order)
    else:
        exponent = phase_series(xx, t, pole.k, order)

    s = abs(exponent.coeff(0, 0).real) if normalized else 0.0
    names = _REFLECTED_ORDER if reflected else _DIRECT_ORDER
    sign = -1.0 if reflected else 1.0

    rows = []
    for name in names:
        if cfg.raw_amplitude_mode:
            value = pole.coefficients(name)[0]
            amplitude = value.conjugate() if hat else value
            series = (exponent - s).exp() * amplitude
        else:
            values = np.array(pole.exponent_series(name, length))
            if hat:
                values = values.conj()
            series = (BivariateSeries.eps_polynomial(values, order, 0) + exponent - s).exp()
        rows.append(series.coeffs[:, 0])
    rows.append(sign * (-exponent - s).exp().coeffs[:, 0])
    return np.array(rows, dtype=complex), s


def _kernel_from_taylor(u: np.ndarray, uhat: np.ndarray, denominator: complex) -> BivariateSeries:
    """Uhat_i(eps_hat) . U_j(eps) / (denominator + eps - eps_hat)"""
    product = BivariateSeries(u.T @ uhat)
    return product * series_recip_affine(denominator, u.shape[1] - 1, uhat.shape[1] - 1)


def kernel_series(i: int, j: int, cfg: SpectralConfiguration, x: float, t: float,
                  max_eps: Optional[int] = None, max_hat: Optional[int] = None) -> BivariateSeries:
    """
    Taylor-Entwicklung von Uhat_i(eps_hat) U_j(eps) / (k_j + eps - (k_hat_i + eps_hat)).

    Args:
        i: Index auf der Uhat-Seite (0..2N-1)
        j: Index auf der U-Seite (0..2N-1)
        max_eps: Ordnung in eps, Standard n_j - 1
        max_hat: Ordnung in eps_hat, Standard n_i - 1

    Returns:
        BivariateSeries; Koeffizient (l2, l1) ist M_{j,i}^{[l2,l1]}
    """
    cfg = _ensure_valid(cfg)
    poles = derive_full_pole_set(cfg)
    max_eps = poles.orders[j] - 1 if max_eps is None else max_eps
    max_hat = poles.orders[i] - 1 if max_hat is None else max_hat

    u, _ = _eigenvector_taylor(cfg, j, x, t, max_eps + 1, hat=False, normalized=False)
    uhat, _ = _eigenvector_taylor(cfg, i, x, t, max_hat + 1, hat=True, normalized=False)
    return _kernel_from_taylor(u, uhat, poles.upper[j] - poles.lower[i])


# --- Assemblierung ---

@dataclass
class SolitonAssembly:
    """
    Skalierte Matrix M~ mit Randvektoren.

    matrix:     M~ (Zeilen: Uhat-Seite, Spalten: U-Seite)
    border_row: erste Komponenten der U-Seite (chi bzw. chi_1)
    border_col: fünfte Komponenten der Uhat-Seite (omega bzw. chi_hat_5)
    log_scale:  ln s je Zeile/Spalte, M = D M~ D
    """
    matrix: np.ndarray
    border_row: np.ndarray
    border_col: np.ndarray
    log_scale: np.ndarray
    poles: FullPoleSet
    kind: str = "simple"
    U: Optional[np.ndarray] = None
    Uhat: Optional[np.ndarray] = None
    singular_threshold: float = SINGULAR_THRESHOLD
    _lu: Optional[LuDecomposition] = field(default=None, init=False, repr=False)

    @property
    def lu(self) -> LuDecomposition:
        if self._lu is None:
            self._lu = factorize(self.matrix, self.singular_threshold)
        return self._lu

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    @property
    def singular(self) -> bool:
        return self.lu.singular

    def full_matrix(self) -> np.ndarray:
        """Unskalierte Matrix M = D M~ D."""
        d = np.exp(self.log_scale)
        return d[:, None] * self.matrix * d[None, :]

    @property
    def log_abs_det_M(self) -> float:
        return self.lu.log_abs_det + 2.0 * float(np.sum(self.log_scale))

    @property
    def abs_det_M(self) -> float:
        if self.lu.zero_pivot:
            return 0.0
        value = self.log_abs_det_M
        return math.inf if value > 709.0 else math.exp(value)

    @property
    def det_M(self) -> complex:
        return self.lu.det_phase * self.abs_det_M

    @property
    def cond_estimate(self) -> float:
        return self.lu.cond_estimate

    def inner_product(self) -> complex:
        """border_row . M^-1 . border_col (skaleninvariant)"""
        return complex(self.border_row @ self.lu.solve(self.border_col))

    def q(self) -> complex:
        return 2j * self.inner_product()


@dataclass
class FieldSample:
    """Ein ausgewerteter Gitterpunkt."""
    x: float
    t: float
    q: complex
    abs_det_M: float
    singular_flag: bool
    log_abs_det_M: float = 0.0
    cond_estimate: float = 1.0

    def to_dict(self) -> Dict[str, object]:
        return {
            "x": self.x,
            "t": self.t,
            "q": [self.q.real, self.q.imag],
            "abs_det_M": self.abs_det_M,
            "singular_flag": self.singular_flag,
            "log_abs_det_M": self.log_abs_det_M,
            "cond_estimate": self.cond_estimate,
        }


def assemble_M_generic(pair: EigenvectorPair, poles: Optional[FullPoleSet] = None) -> np.ndarray:
    """m_il = Uhat_i U_l / (k_l - k_hat_i), direkt aus den Eigenvektoren."""
    poles = pair.poles if poles is None else poles
    upper = np.array(poles.upper)
    lower = np.array(poles.lower)
    return (pair.Uhat @ pair.U.T) / (upper[None, :] - lower[:, None])


def assemble_M_simple(cfg: SpectralConfiguration, x: float, t: float,
                      singular_threshold: float = SINGULAR_THRESHOLD) -> SolitonAssembly:
    """
    2N x 2N-Matrix aus den vier Blockformeln (direkt/direkt, direkt/gespiegelt,
    gespiegelt/direkt, gespiegelt/gespiegelt), normalisiert.
    """
    cfg = _ensure_valid(cfg)
    if not cfg.is_simple:
        raise ConfigurationError("assemble_M_simple erfordert Pole erster Ordnung", {"max_order": cfg.max_order})

    k = np.array([p.k for p in cfg.poles])
    kc = k.conj()
    amps = _amplitude_table(cfg)
    swapped = amps[:, [2, 3, 0, 1]]
    ep, em, s = _split_phase(np.array([phase(x, t, kl) for kl in k]), True)
    fp, fm, sr = _split_phase(np.array([phase(-x, t, kl) for kl in k]), True)

    def denominator(k_col, k_hat_row):
        return k_col[None, :] - k_hat_row[:, None]

    m11 = ((amps.conj() @ amps.T) * np.outer(ep.conj(), ep) + np.outer(em.conj(), em)) / denominator(k, kc)
    m12 = ((amps.conj() @ swapped.T) * np.outer(ep.conj(), fp) - np.outer(em.conj(), fm)) / denominator(-k, kc)
    m21 = ((swapped.conj() @ amps.T) * np.outer(fp.conj(), ep) - np.outer(fm.conj(), em)) / denominator(k, -kc)
    m22 = ((swapped.conj() @ swapped.T) * np.outer(fp.conj(), fp) + np.outer(fm.conj(), fm)) / denominator(-k, -kc)
    matrix = np.block([[m11, m12], [m21, m22]])

    U = np.vstack([
        np.column_stack([amps * ep[:, None], em]),
        np.column_stack([swapped * fp[:, None], -fm]),
    ])
    return SolitonAssembly(
        matrix=matrix,
        border_row=U[:, 0].copy(),
        border_col=U[:, 4].conj(),
        log_scale=np.concatenate([s, sr]),
        poles=derive_full_pole_set(cfg),
        kind="simple",
        U=U,
        Uhat=U.conj(),
        singular_threshold=singular_threshold,
    )


def assemble_M_highorder(cfg: SpectralConfiguration, x: float, t: float,
                         singular_threshold: float = SINGULAR_THRESHOLD) -> SolitonAssembly:
    """
    Block-Matrix der Größe 2N0 x 2N0.

    Zeile (i, l1): Uhat-Seite, Potenz eps_hat**l1; Spalte (j, l2): U-Seite,
    Potenz eps**l2; Eintrag = Koeffizient (l2, l1) des Kerns K_ij.
    Ränder: eps**l2-Koeffizient von U_j[1] bzw. eps_hat**l1-Koeffizient von Uhat_i[5].
    """
    cfg = _ensure_valid(cfg)
    poles = derive_full_pole_set(cfg)
    count = len(poles)

    taylor_u: List[np.ndarray] = []
    taylor_hat: List[np.ndarray] = []
    scales: List[float] = []
    for index in range(count):
        u, s = _eigenvector_taylor(cfg, index, x, t, poles.orders[index], hat=False, normalized=True)
        uhat, _ = _eigenvector_taylor(cfg, index, x, t, poles.orders[index], hat=True, normalized=True)
        taylor_u.append(u)
        taylor_hat.append(uhat)
        scales.append(s)

    offsets = np.concatenate([[0], np.cumsum(poles.orders)])
    size = int(offsets[-1])
    matrix = np.zeros((size, size), dtype=complex)
    for i in range(count):
        for j in range(count):
            kernel = _kernel_from_taylor(taylor_u[j], taylor_hat[i], poles.upper[j] - poles.lower[i])
            matrix[offsets[i]:offsets[i + 1], offsets[j]:offsets[j + 1]] = kernel.coeffs.T

    return SolitonAssembly(
        matrix=matrix,
        border_row=np.concatenate([u[0] for u in taylor_u]),
        border_col=np.concatenate([uhat[4] for uhat in taylor_hat]),
        log_scale=np.repeat(scales, poles.orders),
        poles=poles,
        kind="highorder",
        singular_threshold=singular_threshold,
    )


def _to_sample(assembly: SolitonAssembly, x: float, t: float, strict: bool) -> FieldSample:
    singular = assembly.singular
    if singular:
        logger.debug(f"Singuläre Assemblierung bei x={x}, t={t} (log|det M|={assembly.log_abs_det_M:.3f})")
        if strict:
            raise SingularAssembly(
                f"|det M| unter der Schwelle bei x={x}, t={t}",
                {"x": x, "t": t, "log_abs_det_M": assembly.log_abs_det_M},
            )
    q = assembly.q() if not assembly.lu.zero_pivot else complex(math.nan, math.nan)
    return FieldSample(
        x=float(x),
        t=float(t),
        q=q,
        abs_det_M=assembly.abs_det_M,
        singular_flag=singular,
        log_abs_det_M=assembly.log_abs_det_M,
        cond_estimate=assembly.cond_estimate,
    )


def q_simple(cfg: SpectralConfiguration, x: float, t: float,
             singular_threshold: float = SINGULAR_THRESHOLD, strict: bool = False) -> FieldSample:
    """
    Einfache N-Soliton-Lösung q = -2i det H / det M = 2i chi M^-1 omega.

    Raises:
        SingularAssembly: nur mit strict=True
    """
    return _to_sample(assemble_M_simple(cfg, x, t, singular_threshold), x, t, strict)


def q_highorder(cfg: SpectralConfiguration, x: float, t: float,
                singular_threshold: float = SINGULAR_THRESHOLD, strict: bool = False) -> FieldSample:
    """Hochordnungs-Lösung q = 2i chi_1 M^-1 chi_hat_5 (beliebige Ordnungen)."""
    return _to_sample(assemble_M_highorder(cfg, x, t, singular_threshold), x, t, strict)


def evaluate(cfg: SpectralConfiguration, x: float, t: float,
             singular_threshold: float = SINGULAR_THRESHOLD, strict: bool = False) -> FieldSample:
    """Wählt den einfachen oder den Hochordnungs-Pfad nach der maximalen Polordnung."""
    cfg = _ensure_valid(cfg)
    if cfg.is_simple:
        return q_simple(cfg, x, t, singular_threshold, strict)
    return q_highorder(cfg, x, t, singular_threshold, strict)


# --- Geschlossene Form für N = 1 ---

def _check_convention(cfg: SpectralConfiguration) -> Tuple[complex, complex]:
    cfg = _ensure_valid(cfg)
    if cfg.n_poles != 1 or not cfg.is_simple:
        raise ConfigurationError("Geschlossene Form nur für N=1 mit Ordnung 1", {"N": cfg.n_poles})
    a, b, c, d = cfg.amplitudes(0)
    for name, value, expected in (("b", b, a.conjugate()), ("d", d, c.conjugate())):
        if abs(value - expected) > 1e-12 * max(1.0, abs(expected)):
            raise ConventionViolation(
                f"Konvention verletzt: {name} muss konjugiert zu {'a' if name == 'b' else 'c'} sein",
                {"coefficient": name, "value": [value.real, value.imag], "expected": [expected.real, expected.imag]},
            )
    return a, c


def one_soliton_determinant(cfg: SpectralConfiguration, x: float, t: float) -> float:
    """det M für N = 1 in der Konvention b = a*, d = c*; stets positiv."""
    a, c = _check_convention(cfg)
    k = cfg.poles[0].k
    delta1 = abs(a) ** 2 + abs(c) ** 2
    delta2 = 2.0 * (a.conjugate() * c).real
    theta = phase(x, t, k)
    theta_r = phase(-x, t, k)
    e = np.exp(2.0 * theta.real)
    e_r = np.exp(2.0 * theta_r.real)
    w = theta.conjugate() + theta_r
    cross = 2.0 * delta2 * np.exp(w) - np.exp(-w)
    return float(
        (2.0 * delta1 * e + 1.0 / e) * (2.0 * delta1 * e_r + 1.0 / e_r) / (4.0 * k.imag ** 2)
        + abs(cross) ** 2 / (4.0 * k.real ** 2)
    )


def q_one_soliton_closed(cfg: SpectralConfiguration, x: float, t: float) -> complex:
    """
    Ein-Soliton über die explizite 2x2-Determinante (ohne allgemeine lineare Algebra).

    Raises:
        ConventionViolation: wenn b != a* oder d != c*
    """
    a, c = _check_convention(cfg)
    k = cfg.poles[0].k
    delta1 = abs(a) ** 2 + abs(c) ** 2
    delta2 = 2.0 * (a.conjugate() * c).real
    theta = phase(x, t, k)
    theta_r = phase(-x, t, k)
    e = np.exp(2.0 * theta.real)
    e_r = np.exp(2.0 * theta_r.real)

    m11 = (2.0 * delta1 * e + 1.0 / e) / (k - k.conjugate())
    m22 = (2.0 * delta1 * e_r + 1.0 / e_r) / (k.conjugate() - k)
    w12 = theta.conjugate() + theta_r
    w21 = theta_r.conjugate() + theta
    m12 = (2.0 * delta2 * np.exp(w12) - np.exp(-w12)) / (-k - k.conjugate())
    m21 = (2.0 * delta2 * np.exp(w21) - np.exp(-w21)) / (k + k.conjugate())
    det = m11 * m22 - m12 * m21

    numerator = (
        a * np.exp(theta) * (m22 * np.exp(-theta.conjugate()) + m12 * np.exp(-theta_r.conjugate()))
        - c * np.exp(theta_r) * (m21 * np.exp(-theta.conjugate()) + m11 * np.exp(-theta_r.conjugate()))
    )
    return complex(2j * numerator / det)


# --- Determinanten und Dressing-Matrizen ---

@dataclass
class BorderedDeterminants:
    """Alle Größen für die skalierte Matrix M~ (q ist skaleninvariant)."""
    det_M: complex
    det_H_leading: complex
    det_H_trailing: complex
    inner_product: complex

    @property
    def q_leading(self) -> complex:
        return -2j * self.det_H_leading / self.det_M

    @property
    def q_trailing(self) -> complex:
        return -2j * self.det_H_trailing / self.det_M


def bordered_determinants(assembly: SolitonAssembly) -> BorderedDeterminants:
    """
    det H direkt in beiden Anordnungen:
    H = [[0, row], [col, M]] (einfache Pole) und H = [[M, col], [row, 0]] (hohe Ordnung).
    """
    m = assembly.matrix
    n = m.shape[0]
    leading = np.zeros((n + 1, n + 1), dtype=complex)
    leading[0, 1:] = assembly.border_row
    leading[1:, 0] = assembly.border_col
    leading[1:, 1:] = m

    trailing = np.zeros((n + 1, n + 1), dtype=complex)
    trailing[:n, :n] = m
    trailing[:n, n] = assembly.border_col
    trailing[n, :n] = assembly.border_row

    return BorderedDeterminants(
        det_M=complex(np.linalg.det(m)),
        det_H_leading=complex(np.linalg.det(leading)),
        det_H_trailing=complex(np.linalg.det(trailing)),
        inner_product=assembly.inner_product(),
    )


def _require_simple_assembly(assembly: SolitonAssembly) -> None:
    if assembly.U is None or assembly.Uhat is None:
        raise ConfigurationError("Dressing-Matrizen erfordern eine einfache Assemblierung")


def _check_off_poles(k: complex, forbidden, label: str) -> None:
    for index, pole in enumerate(forbidden):
        if abs(k - pole) <= POLE_TOLERANCE * max(1.0, abs(k)):
            raise PoleEvaluation(
                f"k={k} fällt auf den Pol {label}_{index}={pole}",
                {"k": [k.real, k.imag], "pole": index, "kind": label},
            )


def dressing_P1(cfg_or_assembly, x: Optional[float] = None, t: Optional[float] = None,
                k: complex = 0j) -> np.ndarray:
    """
    P1(k) = I - sum_il U_i Uhat_l (M^-1)_il / (k - k_hat_l)

    Akzeptiert eine Konfiguration mit (x, t) oder eine fertige einfache Assemblierung.

    Raises:
        PoleEvaluation: wenn k auf einen Pol k_hat_l fällt
    """
    assembly = _as_assembly(cfg_or_assembly, x, t)
    k = complex(k)
    _check_off_poles(k, assembly.poles.lower, "k_hat")
    weights = 1.0 / (k - np.array(assembly.poles.lower))
    return np.eye(5, dtype=complex) - assembly.U.T @ assembly.lu.solve(weights[:, None] * assembly.Uhat)


def dressing_P2(cfg_or_assembly, x: Optional[float] = None, t: Optional[float] = None,
                k: complex = 0j) -> np.ndarray:
    """
    P2(k) = I + sum_il U_i Uhat_l (M^-1)_il / (k - k_i)

    Raises:
        PoleEvaluation: wenn k auf einen Pol k_i fällt
    """
    assembly = _as_assembly(cfg_or_assembly, x, t)
    k = complex(k)
    _check_off_poles(k, assembly.poles.upper, "k")
    weights = 1.0 / (k - np.array(assembly.poles.upper))
    return np.eye(5, dtype=complex) + (assembly.U.T * weights[None, :]) @ assembly.lu.solve(assembly.Uhat)


def dressing_residue(cfg_or_assembly, x: Optional[float] = None, t: Optional[float] = None) -> np.ndarray:
    """P1^[1] = -sum_il U_i Uhat_l (M^-1)_il, der 1/k-Koeffizient von P1."""
    assembly = _as_assembly(cfg_or_assembly, x, t)
    return -assembly.U.T @ assembly.lu.solve(assembly.Uhat)


def _as_assembly(cfg_or_assembly, x, t) -> SolitonAssembly:
    if isinstance(cfg_or_assembly, SolitonAssembly):
        assembly = cfg_or_assembly
    else:
        if x is None or t is None:
            raise ValueError("x und t sind für eine Konfiguration erforderlich")
        assembly = assemble_M_simple(cfg_or_assembly, x, t)
    _require_simple_assembly(assembly)
    return assembly
