# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
""":mod:`setcross.utils` includes input checks and serialization helpers."""
from typing import List

from setcross.utils._check import (
    STATISTICS,
    check_block_range,
    check_capacity,
    check_nonnegative_int,
    check_positive_int,
    check_statistic,
)
from setcross.utils._serialize import rational_to_json, to_decimal_strings

__all__: List[str] = [
    "STATISTICS",
    "check_block_range",
    "check_capacity",
    "check_nonnegative_int",
    "check_positive_int",
    "check_statistic",
    "rational_to_json",
    "to_decimal_strings",
]
__author__: List[str] = ["RNKuhns"]
