# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
""":mod:`setcross.asymptotics` compares exact values with their limit behavior.

It holds the leading-term approximations of Stirling numbers, moments and
Bell-number ratios, and Kolmogorov-distance diagnostics for the Gaussian limits.
"""
from typing import List

from setcross.asymptotics._approx import (
    as_mpf,
    bell_central_diff,
    bell_central_diff_approx,
    bell_consecutive_diff,
    bell_consecutive_diff_approx,
    bell_ratio,
    bell_ratio_approx,
    bell_ratio_shift,
    bell_ratio_shift_approx,
    mean_block_approx,
    mean_global_approx,
    stirling_approx,
    var_block_approx,
    var_global_approx,
    var_global_circular_bound,
)
from setcross.asymptotics._gaussian import (
    GaussianDiagnostic,
    gaussian_distance,
    kolmogorov_distance,
)
from setcross.asymptotics._report import (
    APPROX_CSV_HEADER,
    FORMULAS,
    ApproxReport,
    approx_report,
)

__all__: List[str] = [
    "APPROX_CSV_HEADER",
    "FORMULAS",
    "ApproxReport",
    "GaussianDiagnostic",
    "approx_report",
    "as_mpf",
    "bell_central_diff",
    "bell_central_diff_approx",
    "bell_consecutive_diff",
    "bell_consecutive_diff_approx",
    "bell_ratio",
    "bell_ratio_approx",
    "bell_ratio_shift",
    "bell_ratio_shift_approx",
    "gaussian_distance",
    "kolmogorov_distance",
    "mean_block_approx",
    "mean_global_approx",
    "stirling_approx",
    "var_block_approx",
    "var_global_approx",
    "var_global_circular_bound",
]
__author__: List[str] = ["RNKuhns"]
