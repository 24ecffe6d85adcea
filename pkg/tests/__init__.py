# -*- coding: utf-8 -*-
"""
Test Suite für Arduino Control Panel
"""
