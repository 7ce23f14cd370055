# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Exact crossing statistics on set partitions."""

__version__ = "0.1.0"
