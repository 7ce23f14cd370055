# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
""":mod:`setcross.distribution` computes the exact crossing distributions.

The polynomial ``T_{n,k}(q)`` is available from four independent methods so
that every value can be cross-checked; probability mass functions follow by
normalizing its coefficients.
"""
from typing import List

from setcross.distribution._identities import lemma_series_identities
from setcross.distribution._methods import (
    BaseDistributionMethod,
    BruteForceMethod,
    JRMethod,
    KSZMethod,
    SeriesMethod,
    get_method,
    t_poly,
    t_poly_brute,
    t_poly_brute_circular,
    t_poly_global,
    t_poly_jr,
    t_poly_ksz,
    t_table_series,
)
from setcross.distribution._pmf import pmf_block, pmf_global
from setcross.distribution._poly import DistPoly, Pmf

__all__: List[str] = [
    "BaseDistributionMethod",
    "BruteForceMethod",
    "DistPoly",
    "JRMethod",
    "KSZMethod",
    "Pmf",
    "SeriesMethod",
    "get_method",
    "lemma_series_identities",
    "pmf_block",
    "pmf_global",
    "t_poly",
    "t_poly_brute",
    "t_poly_brute_circular",
    "t_poly_global",
    "t_poly_jr",
    "t_poly_ksz",
    "t_table_series",
]
__author__: List[str] = ["RNKuhns"]
