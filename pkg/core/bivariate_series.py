# -*- coding: utf-8 -*-
"""
core/bivariate_series.py
Abgeschnittene komplexe Taylor-Reihen in zwei Störparametern (eps, eps_hat).

Eine Reihe ist eine dichte Koeffiziententabelle c[i, j] zum Monom
eps**i * eps_hat**j mit i <= max_eps, j <= max_hat. Verknüpfungen
schneiden auf das komponentenweise Minimum der Ordnungen ab.
"""
from typing import Sequence, Union

import numpy as np
from scipy.signal import convolve2d
from scipy.special import comb

from core.exceptions import OrderOutOfRange, ZeroDenominator

Number = Union[int, float, complex]


class BivariateSeries:
    """Abgeschnittene Taylor-Reihe in (eps, eps_hat) mit Wertsemantik."""

    __array_ufunc__ = None
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        table = np.array(coeffs, dtype=complex)
        if table.ndim != 2 or table.shape[0] < 1 or table.shape[1] < 1:
            raise ValueError(f"Koeffiziententabelle muss 2D und nicht leer sein, ist {table.shape}")
        self.coeffs = table

    # --- Konstruktoren ---

    @classmethod
    def zeros(cls, max_eps: int, max_hat: int) -> "BivariateSeries":
        _check_orders(max_eps, max_hat)
        return cls(np.zeros((max_eps + 1, max_hat + 1), dtype=complex))

    @classmethod
    def constant(cls, value: Number, max_eps: int, max_hat: int) -> "BivariateSeries":
        series = cls.zeros(max_eps, max_hat)
        series.coeffs[0, 0] = value
        return series

    @classmethod
    def eps_polynomial(cls, values: Sequence[Number], max_eps: int, max_hat: int) -> "BivariateSeries":
        """Reihe nur in eps: values[i] ist der Koeffizient von eps**i (überzählige werden abgeschnitten)."""
        series = cls.zeros(max_eps, max_hat)
        n = min(len(values), max_eps + 1)
        series.coeffs[:n, 0] = np.asarray(values, dtype=complex)[:n]
        return series

    @classmethod
    def hat_polynomial(cls, values: Sequence[Number], max_eps: int, max_hat: int) -> "BivariateSeries":
        """Reihe nur in eps_hat."""
        series = cls.zeros(max_eps, max_hat)
        n = min(len(values), max_hat + 1)
        series.coeffs[0, :n] = np.asarray(values, dtype=complex)[:n]
        return series

    # --- Eigenschaften ---

    @property
    def max_eps(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def max_hat(self) -> int:
        return self.coeffs.shape[1] - 1

    @property
    def orders(self):
        return self.max_eps, self.max_hat

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.coeffs)))

    def coeff(self, i: int, j: int) -> complex:
        """Koeffizient von eps**i eps_hat**j."""
        if i < 0 or j < 0 or i > self.max_eps or j > self.max_hat:
            raise OrderOutOfRange(
                f"Koeffizient ({i}, {j}) außerhalb der Ordnungen {self.orders}",
                {"i": i, "j": j, "max_eps": self.max_eps, "max_hat": self.max_hat},
            )
        return complex(self.coeffs[i, j])

    def truncate(self, max_eps: int, max_hat: int) -> "BivariateSeries":
        """Abschneiden auf kleinere (oder gleiche) Ordnungen."""
        _check_orders(max_eps, max_hat)
        if max_eps > self.max_eps or max_hat > self.max_hat:
            raise OrderOutOfRange(
                f"Kann Ordnungen {self.orders} nicht auf ({max_eps}, {max_hat}) erweitern",
                {"max_eps": max_eps, "max_hat": max_hat},
            )
        return BivariateSeries(self.coeffs[:max_eps + 1, :max_hat + 1])

    def evaluate(self, eps: Number, eps_hat: Number) -> complex:
        """Wertet das abgeschnittene Polynom an (eps, eps_hat) aus."""
        powers_eps = np.power(complex(eps), np.arange(self.max_eps + 1))
        powers_hat = np.power(complex(eps_hat), np.arange(self.max_hat + 1))
        return complex(powers_eps @ self.coeffs @ powers_hat)

    # --- Arithmetik ---

    def _common(self, other: "BivariateSeries"):
        me = min(self.max_eps, other.max_eps)
        mh = min(self.max_hat, other.max_hat)
        return self.coeffs[:me + 1, :mh + 1], other.coeffs[:me + 1, :mh + 1]

    def __add__(self, other):
        if isinstance(other, BivariateSeries):
            a, b = self._common(other)
            return BivariateSeries(a + b)
        result = BivariateSeries(self.coeffs)
        result.coeffs[0, 0] += other
        return result

    __radd__ = __add__

    def __neg__(self):
        return BivariateSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, BivariateSeries):
            a, b = self._common(other)
            me, mh = a.shape[0] - 1, a.shape[1] - 1
            # Cauchy-Produkt, abgeschnitten auf die gemeinsamen Ordnungen
            return BivariateSeries(convolve2d(a, b)[:me + 1, :mh + 1])
        return BivariateSeries(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, BivariateSeries):
            return NotImplemented
        return BivariateSeries(self.coeffs / other)

    def exp(self) -> "BivariateSeries":
        """exp(a00) * exp(a - a00); der zweite Faktor ist eine endliche nilpotente Summe."""
        a00 = self.coeffs[0, 0]
        nilpotent = BivariateSeries(self.coeffs)
        nilpotent.coeffs[0, 0] = 0.0

        total = BivariateSeries.constant(1.0, self.max_eps, self.max_hat)
        term = BivariateSeries.constant(1.0, self.max_eps, self.max_hat)
        for m in range(1, self.max_eps + self.max_hat + 1):
            term = (term * nilpotent) / m
            total = total + term
        return total * np.exp(a00)

    def allclose(self, other: "BivariateSeries", rtol: float = 1e-12, atol: float = 0.0) -> bool:
        if self.orders != other.orders:
            return False
        return bool(np.allclose(self.coeffs, other.coeffs, rtol=rtol, atol=atol))

    def __repr__(self) -> str:
        return f"BivariateSeries(orders={self.orders}, coeffs={self.coeffs.tolist()!r})"


def _check_orders(max_eps: int, max_hat: int) -> None:
    if max_eps < 0 or max_hat < 0:
        raise OrderOutOfRange(
            f"Ordnungen müssen >= 0 sein: ({max_eps}, {max_hat})",
            {"max_eps": max_eps, "max_hat": max_hat},
        )


# --- Funktionale Schnittstelle ---

def series_add(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    return a + b


def series_mul(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    return a * b


def series_exp(a: BivariateSeries) -> BivariateSeries:
    return a.exp()


def series_coeff(a: BivariateSeries, i: int, j: int) -> complex:
    return a.coeff(i, j)


def series_recip_affine(c: Number, max_eps: int, max_hat: int) -> BivariateSeries:
    """
    Taylor-Koeffizienten von 1/(c + eps - eps_hat).

    Mit u = eps - eps_hat gilt 1/(c+u) = sum (-u)**n / c**(n+1); der
    Koeffizient von eps**i eps_hat**j ist (-1)**i * binom(i+j, i) / c**(i+j+1).

    Raises:
        ZeroDenominator: wenn c == 0
    """
    c = complex(c)
    if c == 0:
        raise ZeroDenominator("Nenner c = 0 in 1/(c + eps - eps_hat)", {"c": [0.0, 0.0]})
    _check_orders(max_eps, max_hat)

    i = np.arange(max_eps + 1)[:, None]
    j = np.arange(max_hat + 1)[None, :]
    n = i + j
    signs = np.where(i % 2 == 0, 1.0, -1.0)
    table = signs * comb(n, i) / np.power(c, n + 1)
    return BivariateSeries(table)
