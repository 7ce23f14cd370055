# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
""":mod:`setcross.moments` gives exact moments of the crossing statistics."""
from typing import List

from setcross.moments._closed_form import (
    mean_block_circular,
    mean_block_linear,
    mean_diff_circular,
    mean_diff_circular_upper,
    mean_global_circular,
    mean_global_linear,
    second_factorial_block,
    second_factorial_global,
    var_block_linear,
    var_diff_bound,
    var_global_linear,
)
from setcross.moments._report import MOMENT_METHODS, MomentReport, moment_report

__all__: List[str] = [
    "MOMENT_METHODS",
    "MomentReport",
    "mean_block_circular",
    "mean_block_linear",
    "mean_diff_circular",
    "mean_diff_circular_upper",
    "mean_global_circular",
    "mean_global_linear",
    "moment_report",
    "second_factorial_block",
    "second_factorial_global",
    "var_block_linear",
    "var_diff_bound",
    "var_global_linear",
]
__author__: List[str] = ["RNKuhns"]
