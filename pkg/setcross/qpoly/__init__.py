# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Exact polynomial, rational-function and truncated-series arithmetic in q."""
from typing import List

from setcross.qpoly._laurent import LaurentPoly, exact_div, poly_gcd
from setcross.qpoly._qanalogs import gaussian_binomial, q_factorial, q_integer
from setcross.qpoly._rational import RationalFn
from setcross.qpoly._series import SeriesContext, TruncatedSeries, series_ops

__all__: List[str] = [
    "LaurentPoly",
    "RationalFn",
    "SeriesContext",
    "TruncatedSeries",
    "exact_div",
    "gaussian_binomial",
    "poly_gcd",
    "q_factorial",
    "q_integer",
    "series_ops",
]
__author__: List[str] = ["RNKuhns"]
