# -*- coding: utf-8 -*-
"""Stub setup file used for editable installations via setuptools."""
from setuptools import setup

setup()
