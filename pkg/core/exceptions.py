# -*- coding: utf-8 -*-
"""
core/exceptions.py
Fehlerhierarchie der ngSS-Bibliothek.

Jeder Fehler trägt einen stabilen Code (Klassenname) und ein details-Dict,
aus dem die CLI ihr maschinenlesbares Fehler-JSON baut.
"""
from typing import Any, Dict, Optional


class NgssError(Exception):
    """Basisklasse aller Bibliotheksfehler."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = dict(details or {})

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_dict(self) -> Dict[str, Any]:
        """Serialisierbare Form für Fehler-JSON."""
        return {"error": self.code, "message": self.message, "details": self.details}


# --- Konfiguration / Eingaben ---

class ConfigurationError(NgssError, ValueError):
    """Ungültige Streudaten oder Eingabedateien."""


class PoleOutsideDPlus(ConfigurationError):
    pass


class DuplicatePole(ConfigurationError):
    pass


class ShortCoefficients(ConfigurationError):
    pass


class NonFinite(ConfigurationError):
    pass


class InvalidSigma(ConfigurationError):
    pass


class RawModeOrderError(ConfigurationError):
    """Rohamplituden sind nur für Ordnung 1 zulässig."""


class SpecFormatError(ConfigurationError):
    pass


class UnknownPreset(ConfigurationError):
    pass


class GridSpecError(ConfigurationError):
    pass


class UsageError(ConfigurationError):
    """Fehlerhafte Kommandozeile."""


# --- Reihenarithmetik ---

class SeriesError(NgssError, ArithmeticError):
    pass


class ZeroDenominator(SeriesError):
    pass


class OrderOutOfRange(SeriesError, IndexError):
    pass


# --- Engine ---

class EngineError(NgssError):
    pass


class SingularAssembly(EngineError):
    pass


class PoleEvaluation(EngineError):
    pass


class ConventionViolation(EngineError):
    pass


# --- Asymptotik ---

class AsymptoticsError(NgssError):
    pass


class BothZero(AsymptoticsError):
    pass


class WrongCase(AsymptoticsError):
    pass


# --- Verifikation ---

class VerificationError(NgssError):
    pass


class SingularOnStencil(VerificationError):
    pass


class ConsistencyFailure(VerificationError):
    pass


class ReductionFailure(VerificationError):
    pass


class DressingFailure(VerificationError):
    pass


# --- Ein-/Ausgabe ---

class IoFailure(NgssError, OSError):
    pass
