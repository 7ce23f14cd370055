# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
""":mod:`setcross.crossings` computes the linear and circular crossing numbers."""
from typing import List

from setcross.crossings._crossings import (
    Arc,
    Chord,
    arcs,
    chords,
    cr,
    cr_circular,
    cr_linear,
    crossing_pairs,
    z_decompose,
)

__all__: List[str] = [
    "Arc",
    "Chord",
    "arcs",
    "chords",
    "cr",
    "cr_circular",
    "cr_linear",
    "crossing_pairs",
    "z_decompose",
]
__author__: List[str] = ["RNKuhns"]
