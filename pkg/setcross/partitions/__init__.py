# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
""":mod:`setcross.partitions` represents, enumerates and standardizes partitions.

Elements are 1-based: a set partition of ``[n]`` partitions ``{1, ..., n}``.
"""
from typing import List

from setcross.partitions._enumerate import enumerate_all, enumerate_k, rgs_prefixes
from setcross.partitions._integer_partition import IntegerPartition, integer_partitions
from setcross.partitions._set_partition import (
    SetPartition,
    as_set_partition,
    block_sizes,
    format_partition,
    parse_partition,
    standardize,
)

__all__: List[str] = [
    "IntegerPartition",
    "SetPartition",
    "as_set_partition",
    "block_sizes",
    "enumerate_all",
    "enumerate_k",
    "format_partition",
    "integer_partitions",
    "parse_partition",
    "rgs_prefixes",
    "standardize",
]
__author__: List[str] = ["RNKuhns"]
