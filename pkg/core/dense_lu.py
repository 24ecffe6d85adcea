# -*- coding: utf-8 -*-
"""
core/dense_lu.py
LU-Zerlegung kleiner dichter komplexer Matrizen mit Zweierpotenz-Äquilibrierung.

Die Matrix wird zeilen- und spaltenweise mit Zweierpotenzen skaliert
(M_eq = R M C, exakt in Gleitkomma), dann mit partieller Pivotisierung
zerlegt. Die Determinante wird als log|det| plus Phase geführt, damit
auch sehr große oder kleine Werte darstellbar bleiben.
"""
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgWarning, get_lapack_funcs, lu_factor, lu_solve

from core.logging_config import get_logger

logger = get_logger(__name__)

LN2 = math.log(2.0)


def _power_of_two_exponents(magnitudes: np.ndarray) -> np.ndarray:
    """Exponent e mit magnitudes = m * 2**e, m in [0.5, 1); 0 für Nullzeilen."""
    _, exponents = np.frexp(magnitudes)
    return np.where(magnitudes > 0, exponents, 0).astype(int)


@dataclass
class LuDecomposition:
    """Ergebnis von factorize(): Zerlegung der äquilibrierten Matrix plus Skalen."""
    lu: np.ndarray
    piv: np.ndarray
    row_exponents: np.ndarray
    col_exponents: np.ndarray
    log_abs_det: float
    det_phase: complex
    rcond: float
    singular: bool
    zero_pivot: bool

    @property
    def size(self) -> int:
        return self.lu.shape[0]

    @property
    def determinant(self) -> complex:
        """det der unskalierten Matrix (kann über-/unterlaufen)."""
        if self.zero_pivot:
            return 0j
        with np.errstate(over="ignore", under="ignore"):
            return complex(self.det_phase * np.exp(self.log_abs_det))

    @property
    def cond_estimate(self) -> float:
        """1-Norm-Konditionsschätzung der äquilibrierten Matrix."""
        return math.inf if self.rcond <= 0 else 1.0 / self.rcond

    def solve(self, b: np.ndarray) -> np.ndarray:
        """Löst M x = b (b Vektor oder Matrix mit Zeilenindex wie M)."""
        b = np.asarray(b, dtype=complex)
        if self.zero_pivot:
            return np.full(b.shape, np.nan + 1j * np.nan)
        r = np.ldexp(1.0, self.row_exponents)
        c = np.ldexp(1.0, self.col_exponents)
        if b.ndim == 1:
            return c * lu_solve((self.lu, self.piv), r * b)
        return c[:, None] * lu_solve((self.lu, self.piv), r[:, None] * b)

    def solve_left(self, row: np.ndarray) -> np.ndarray:
        """Löst y M = row."""
        row = np.asarray(row, dtype=complex)
        if self.zero_pivot:
            return np.full(row.shape, np.nan + 1j * np.nan)
        r = np.ldexp(1.0, self.row_exponents)
        c = np.ldexp(1.0, self.col_exponents)
        return r * lu_solve((self.lu, self.piv), c * row, trans=1)


def factorize(matrix: np.ndarray, singular_threshold: float = 1e-30) -> LuDecomposition:
    """
    Äquilibriert und zerlegt eine quadratische komplexe Matrix.

    Args:
        matrix: quadratische Matrix
        singular_threshold: Schwelle für |det M_eq|, darunter gilt die Matrix als singulär

    Returns:
        LuDecomposition (singuläre Matrizen werden markiert, nicht abgelehnt)
    """
    a = np.array(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"Quadratische Matrix erwartet, erhalten {a.shape}")

    row_exponents = -_power_of_two_exponents(np.max(np.abs(a), axis=1))
    a = np.ldexp(1.0, row_exponents)[:, None] * a
    col_exponents = -_power_of_two_exponents(np.max(np.abs(a), axis=0))
    a = a * np.ldexp(1.0, col_exponents)[None, :]

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, piv = lu_factor(a, check_finite=True)

    diagonal = np.diag(lu)
    zero_pivot = bool(np.any(diagonal == 0))
    swaps = int(np.count_nonzero(piv != np.arange(len(piv))))
    sign = -1.0 if swaps % 2 else 1.0

    if zero_pivot:
        log_abs_eq = -math.inf
        phase = 1.0 + 0j
    else:
        log_abs_eq = float(np.sum(np.log(np.abs(diagonal))))
        phase = complex(sign * np.prod(diagonal / np.abs(diagonal)))

    # det M = det M_eq / (prod R * prod C)
    log_abs_det = log_abs_eq - LN2 * float(np.sum(row_exponents) + np.sum(col_exponents))
    singular = zero_pivot or log_abs_eq < math.log(singular_threshold)

    if zero_pivot:
        rcond = 0.0
    else:
        gecon = get_lapack_funcs("gecon", (lu,))
        rcond, info = gecon(lu, np.linalg.norm(a, 1), norm="1")
        rcond = float(np.real(rcond)) if info == 0 else 0.0

    if singular:
        logger.debug(f"Singuläre Matrix: log|det M_eq|={log_abs_eq:.3f}, rcond={rcond:.3e}")

    return LuDecomposition(
        lu=lu,
        piv=piv,
        row_exponents=row_exponents,
        col_exponents=col_exponents,
        log_abs_det=log_abs_det,
        det_phase=phase,
        rcond=rcond,
        singular=singular,
        zero_pivot=zero_pivot,
    )
