# -*- coding: utf-8 -*-
"""Auswertung: Asymptotik, Verifikation, Gitter, Export und Presets."""
