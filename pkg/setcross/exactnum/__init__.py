# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
""":mod:`setcross.exactnum` provides exact Stirling, Bell and related numbers.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`, so
every value in this sub-package is exact.
"""
from typing import List

from setcross.exactnum._sequences import (
    bell,
    bell_combination_coefficients,
    bell_power_sum,
    bell_power_sum_lemma,
    binomial,
    catalan,
    narayana,
    stirling2,
    stirling_row,
)

__all__: List[str] = [
    "bell",
    "bell_combination_coefficients",
    "bell_power_sum",
    "bell_power_sum_lemma",
    "binomial",
    "catalan",
    "narayana",
    "stirling2",
    "stirling_row",
]
__author__: List[str] = ["RNKuhns"]
