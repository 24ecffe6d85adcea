# -*- coding: utf-8 -*-
"""
core/logging_config.py
Zentrales Logging-Modul für die ngSS-Soliton-Bibliothek.
Bietet konsistentes Logging für Engine, Verifikation und CLI.
"""
import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Dict, Optional


LOG_FORMAT = '%(asctime)s - %(name)-20s - %(levelname)-8s - %(message)s'
LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

_LEVEL_NAMES = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


def level_from_env(default: int = logging.INFO) -> int:
    """Liest NGSS_LOG_LEVEL; unbekannte Werte fallen auf den Default zurück."""
    raw = os.environ.get("NGSS_LOG_LEVEL", "").strip().upper()
    return _LEVEL_NAMES.get(raw, default)


class SolitonLogger:
    """Zentrale Logging-Konfiguration für die Soliton-Bibliothek"""

    _configured = False
    _loggers: Dict[str, logging.Logger] = {}

    @classmethod
    def setup(cls,
              log_file: Optional[str] = None,
              level: Optional[int] = None,
              console_output: bool = True,
              file_output: Optional[bool] = None,
              max_bytes: int = 10 * 1024 * 1024,  # 10 MB
              backup_count: int = 5) -> None:
        """
        Konfiguriert das zentrale Logging-System

        Args:
            log_file: Pfad zur Log-Datei (Default: NGSS_LOG_FILE)
            level: Logging-Level (Default: NGSS_LOG_LEVEL oder INFO)
            console_output: Ausgabe auf stderr
            file_output: Ausgabe in Datei (Default: nur wenn eine Log-Datei bekannt ist)
            max_bytes: Maximale Größe der Log-Datei vor Rotation
            backup_count: Anzahl der Backup-Dateien
        """
        if cls._configured:
            return

        if level is None:
            level = level_from_env()
        if log_file is None:
            log_file = os.environ.get("NGSS_LOG_FILE") or None
        if file_output is None:
            file_output = log_file is not None

        root_logger = logging.getLogger()
        root_logger.setLevel(level)
        root_logger.handlers.clear()

        log_format = logging.Formatter(fmt=LOG_FORMAT, datefmt=LOG_DATE_FORMAT)

        # stdout bleibt für maschinenlesbare CLI-Ausgaben reserviert
        if console_output:
            if sys.platform == 'win32':
                try:
                    # Windows-Konsole auf UTF-8 umstellen
                    sys.stderr.reconfigure(encoding='utf-8', errors='replace')
                except (AttributeError, OSError, ValueError) as e:
                    root_logger.warning(f"UTF-8 Konsolen-Encoding konnte nicht aktiviert werden: {e}")
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(level)
            console_handler.setFormatter(log_format)
            root_logger.addHandler(console_handler)

        if file_output and log_file:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)

            file_handler = RotatingFileHandler(
                log_file,
                maxBytes=max_bytes,
                backupCount=backup_count,
                encoding='utf-8'
            )
            file_handler.setLevel(level)
            file_handler.setFormatter(log_format)
            root_logger.addHandler(file_handler)

        cls._configured = True
        root_logger.debug("ngSS Logging-System initialisiert (Level %s)", logging.getLevelName(level))

    @classmethod
    def get_logger(cls, name: str) -> logging.Logger:
        """
        Gibt einen konfigurierten Logger für ein Modul zurück

        Args:
            name: Name des Moduls (z.B. __name__)

        Returns:
            Konfigurierter Logger
        """
        if not cls._configured:
            cls.setup()

        if name not in cls._loggers:
            cls._loggers[name] = logging.getLogger(name)

        return cls._loggers[name]

    @classmethod
    def set_level(cls, level: int, logger_name: Optional[str] = None) -> None:
        """
        Ändert das Logging-Level zur Laufzeit (Logger und Handler)

        Args:
            level: Neues Logging-Level
            logger_name: Name des Loggers (None = Root Logger)
        """
        if logger_name:
            logging.getLogger(logger_name).setLevel(level)
            return
        root_logger = logging.getLogger()
        root_logger.setLevel(level)
        for handler in root_logger.handlers:
            handler.setLevel(level)

    @classmethod
    def enable_debug(cls) -> None:
        """Aktiviert DEBUG-Level für detailliertes Logging"""
        cls.set_level(logging.DEBUG)
        logging.getLogger(__name__).debug("Debug-Logging aktiviert")

    @classmethod
    def disable_debug(cls) -> None:
        """Deaktiviert DEBUG-Level"""
        cls.set_level(logging.INFO)


def get_logger(name: str) -> logging.Logger:
    """
    Shortcut-Funktion zum Abrufen eines Loggers

    Usage:
        from core.logging_config import get_logger
        logger = get_logger(__name__)
        logger.info("Nachricht")
    """
    return SolitonLogger.get_logger(name)


# Bei Import automatisch Setup durchführen
if __name__ != "__main__":
    SolitonLogger.setup()
