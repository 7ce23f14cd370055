# -*- coding: utf-8 -*-
"""Test functionality of :mod:`setcross.distribution`."""
