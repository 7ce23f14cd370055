# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
""":mod:`setcross.extremal` computes maximal crossing numbers and maximizers.

Weights of block-size vectors, the closed forms for the maxima over ``Pi_n^k``
and ``Pi_n``, the maximizing shapes, the Ferrers-filling construction that
attains them and the numbers of maximizers.
"""
from typing import List

from setcross.extremal._construction import (
    ExtremalReport,
    build_pi,
    global_maximizer_witnesses,
    maxima_report,
)
from setcross.extremal._counts import (
    maximizer_count,
    maximizer_count_brute,
    maximizer_count_global,
)
from setcross.extremal._maxima import (
    argmax_blocks,
    g_sequence,
    lambda_star,
    max_block,
    max_global,
    maximizer_shapes,
)
from setcross.extremal._weights import (
    MoveDelta,
    WeightsRT,
    as_integer_partition,
    max_pair,
    move_delta,
    nonconsecutive_pairs,
    weight,
    weight_circular,
    weight_linear,
    weights_RT,
)

__all__: List[str] = [
    "ExtremalReport",
    "MoveDelta",
    "WeightsRT",
    "argmax_blocks",
    "as_integer_partition",
    "build_pi",
    "g_sequence",
    "global_maximizer_witnesses",
    "lambda_star",
    "max_block",
    "max_global",
    "max_pair",
    "maxima_report",
    "maximizer_count",
    "maximizer_count_brute",
    "maximizer_count_global",
    "maximizer_shapes",
    "move_delta",
    "nonconsecutive_pairs",
    "weight",
    "weight_circular",
    "weight_linear",
    "weights_RT",
]
__author__: List[str] = ["RNKuhns"]
