import json
import os
from typing import Any, Dict, Optional

from core.logging_config import get_logger

logger = get_logger(__name__)

# Standardwerte für numerische Schwellen und Verifikationsläufe
DEFAULT_SETTINGS: Dict[str, Any] = {
    "singular_threshold": 1e-30,
    "residual_step": 1e-3,
    "residual_points": 20,
    "seed": 20240607,
    "tolerance_simple": 1e-5,
    "tolerance_highorder": 1e-4,
    "identity_tolerance": 1e-9,
    "reduction_tolerance": 1e-9,
    "fit_time": 30.0,
    "threads": None,
}


class ConfigManager:
    """
    Verwaltet die Lade- und Speichervorgänge für die JSON-Einstellungsdatei.

    Die Einstellungen werden beim Start einmal in self.config geladen;
    get() fällt für fehlende Schlüssel auf DEFAULT_SETTINGS zurück.
    """

    def __init__(self, config_file="ngss_settings.json"):
        """
        Initialisiert den ConfigManager und lädt die Konfiguration.
        """
        self.config_file = str(config_file)
        self.config = {}
        self.load_config_from_file()

    def load_config_from_file(self):
        """
        Lädt die Konfiguration aus der Datei in das Attribut 'self.config'.
        Gibt die geladene Konfiguration auch zurück.
        """
        try:
            if os.path.exists(self.config_file):
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    self.config = json.load(f)
                    if not isinstance(self.config, dict):
                        logger.warning(f"Einstellungsdatei {self.config_file} ist beschädigt. Verwende Standardwerte.")
                        self.config = {}
                    return self.config
            else:
                logger.debug(f"Einstellungsdatei {self.config_file} nicht gefunden. Verwende Standardwerte.")
                self.config = {}
                return self.config
        except json.JSONDecodeError:
            logger.error(f"Einstellungsdatei {self.config_file} konnte nicht dekodiert werden. Erstelle Backup und verwende Standardwerte.")
            try:
                if os.path.exists(self.config_file):
                    os.replace(self.config_file, f"{self.config_file}.bak")
            except OSError as e:
                logger.error(f"Konnte Backup-Datei nicht erstellen: {e}")
            self.config = {}
            return self.config
        except OSError as e:
            logger.error(f"Fehler beim Laden der Einstellungen: {e}")
            self.config = {}
            return self.config

    def save_config_to_file(self):
        """
        Speichert den aktuellen Inhalt von 'self.config' in die Datei.
        """
        try:
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(self.config, f, indent=4, sort_keys=True)
        except (IOError, TypeError) as e:
            logger.error(f"Fehler beim Speichern der Einstellungen in {self.config_file}: {e}")

    def get(self, key, default=None):
        """
        Ruft einen Wert ab; fehlende Schlüssel kommen aus DEFAULT_SETTINGS.

        Beispiel:
        settings.get("residual_step")  # 1e-3
        """
        if key in self.config:
            return self.config[key]
        if default is None:
            return DEFAULT_SETTINGS.get(key)
        return default

    def set(self, key, value):
        """
        Setzt einen Wert in der Konfiguration (self.config).
        Dieser wird erst gespeichert, wenn save_config_to_file() aufgerufen wird.
        """
        self.config[key] = value

    def effective_settings(self) -> Dict[str, Any]:
        """Defaults überlagert mit den Werten der Datei."""
        merged = dict(DEFAULT_SETTINGS)
        merged.update(self.config)
        return merged


def worker_count(settings: Optional[ConfigManager] = None) -> int:
    """
    Bestimmt die Anzahl paralleler Worker.

    Reihenfolge: NGSS_THREADS > settings["threads"] > os.cpu_count().
    Ungültige Angaben werden geloggt und ignoriert.
    """
    raw = os.environ.get("NGSS_THREADS")
    if raw:
        try:
            value = int(raw)
            if value >= 1:
                return value
            logger.warning(f"NGSS_THREADS={raw!r} ist nicht positiv, wird ignoriert")
        except ValueError:
            logger.warning(f"NGSS_THREADS={raw!r} ist keine Ganzzahl, wird ignoriert")

    if settings is not None:
        configured = settings.get("threads")
        if isinstance(configured, int) and not isinstance(configured, bool) and configured >= 1:
            return configured

    return max(1, os.cpu_count() or 1)
