# -*- coding: utf-8 -*-
"""Kern: Streudaten, Reihenarithmetik, Soliton-Engine, Konfiguration und Logging."""
