# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Linear and circular crossing numbers of set partitions.

In the linear representation the elements ``1..n`` lie on a line and each block
``b_1 < ... < b_m`` is drawn as the path of arcs ``(b_i, b_(i+1))``. In the
circular representation the elements lie on a circle and each block is drawn as
its convex polygon. Both statistics count pairs of crossing segments; all tests
are comparisons of positions, no geometry is involved.
"""
from __future__ import annotations

from itertools import combinations
from typing import Dict, List, NamedTuple, Tuple

import numpy as np

from setcross.partitions import as_set_partition, standardize
from setcross.partitions._set_partition import PartitionLike
from setcross.utils._check import check_statistic

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


class Arc(NamedTuple):
    """Arc joining consecutive elements ``left < right`` of one block."""

    left: int
    right: int


class Chord(NamedTuple):
    """Polygon edge ``a < b`` of the block with 1-based index `block_id`."""

    a: int
    b: int
    block_id: int


def arcs(partition: PartitionLike) -> List[Arc]:
    """Return the arcs of the linear representation, block by block.

    Examples
    --------
    >>> from setcross.crossings import arcs
    >>> arcs("1 3 5/2 4")
    [Arc(left=1, right=3), Arc(left=3, right=5), Arc(left=2, right=4)]
    """
    partition = as_set_partition(partition)
    return [
        Arc(block[i], block[i + 1])
        for block in partition.blocks
        for i in range(len(block) - 1)
    ]


def chords(partition: PartitionLike) -> List[Chord]:
    """Return the polygon edges of the circular representation.

    A block of size 2 contributes its single segment; a block
    ``b_1 < ... < b_m`` with ``m >= 3`` contributes the consecutive edges and
    the closing edge ``(b_1, b_m)``.

    Examples
    --------
    >>> from setcross.crossings import chords
    >>> figure = "1 10/2 3 7 9/4/5 6 12/8 11"
    >>> [(c.a, c.b) for c in chords(figure) if c.block_id == 2]
    [(2, 3), (3, 7), (7, 9), (2, 9)]
    """
    partition = as_set_partition(partition)
    out: List[Chord] = []
    for block_id, block in enumerate(partition.blocks, start=1):
        m = len(block)
        for i in range(m - 1):
            out.append(Chord(block[i], block[i + 1], block_id))
        if m >= 3:
            out.append(Chord(block[0], block[-1], block_id))
    return out


def _arcs_cross(x: Arc, y: Arc) -> bool:
    return x.left < y.left < x.right < y.right or y.left < x.left < y.right < x.right


def _chords_cross(x: Chord, y: Chord) -> bool:
    if len({x.a, x.b, y.a, y.b}) < 4:
        return False
    # exactly one endpoint of y strictly inside the interval (x.a, x.b)
    return (x.a < y.a < x.b) != (x.a < y.b < x.b)


def cr_linear(partition: PartitionLike) -> int:
    """Number of arc pairs ``(a, b), (c, d)`` with ``a < c < b < d``.

    Examples
    --------
    >>> from setcross.crossings import cr_linear
    >>> cr_linear("1 10/2 3 7 9/4/5 6 12/8 11"), cr_linear("1 4/2 3")
    (4, 0)
    """
    segments = np.array(arcs(partition), dtype=np.int64).reshape(-1, 2)
    left, right = segments[:, 0], segments[:, 1]
    # ordered pairs (i, j) with left_i < left_j < right_i < right_j
    crossing = (
        (left[:, None] < left[None, :])
        & (left[None, :] < right[:, None])
        & (right[:, None] < right[None, :])
    )
    return int(crossing.sum())


def cr_circular(partition: PartitionLike) -> int:
    """Number of chord pairs with four distinct, interleaving endpoints.

    Examples
    --------
    >>> from setcross.crossings import cr_circular
    >>> cr_circular("1 10/2 3 7 9/4/5 6 12/8 11"), cr_circular("1 3/2 4")
    (9, 1)
    """
    segments = chords(partition)
    return sum(1 for x, y in combinations(segments, 2) if _chords_cross(x, y))


def cr(partition: PartitionLike, stat: str) -> int:
    """Dispatch to :func:`cr_linear` or :func:`cr_circular` by name."""
    stat = check_statistic(stat)
    return cr_linear(partition) if stat == "linear" else cr_circular(partition)


def crossing_pairs(partition: PartitionLike, stat: str = "linear") -> List[Tuple]:
    """Return the crossing segment pairs themselves.

    Parameters
    ----------
    partition : SetPartition, str or sequence
        The partition.
    stat : {"linear", "circular"}, default="linear"
        Which representation to use.

    Returns
    -------
    pairs : list of tuple
        Pairs of :class:`Arc` or of :class:`Chord`; its length is the crossing
        number.

    Examples
    --------
    >>> from setcross.crossings import crossing_pairs
    >>> crossing_pairs("1 3/2 4")
    [(Arc(left=1, right=3), Arc(left=2, right=4))]
    """
    stat = check_statistic(stat)
    if stat == "linear":
        return [
            (x, y) for x, y in combinations(arcs(partition), 2) if _arcs_cross(x, y)
        ]
    return [
        (x, y) for x, y in combinations(chords(partition), 2) if _chords_cross(x, y)
    ]


def z_decompose(partition: PartitionLike, stat: str) -> Dict[Tuple[int, int], int]:
    """Split a crossing number over pairs of blocks.

    Entry ``(i, j)`` with ``i < j`` (1-based block indices) is the statistic of
    the standardized two-block partition ``B_i / B_j``. Segments of different
    blocks cross exactly as they do in that restriction, so the entries sum to
    the statistic of the whole partition.

    Parameters
    ----------
    partition : SetPartition, str or sequence
        The partition.
    stat : {"linear", "circular"}
        Statistic to decompose.

    Returns
    -------
    entries : dict
        One entry for every pair of blocks; empty for fewer than two blocks.

    Examples
    --------
    >>> from setcross.crossings import z_decompose
    >>> z_decompose("1 3/2 4", "linear")
    {(1, 2): 1}
    >>> sum(z_decompose("1 10/2 3 7 9/4/5 6 12/8 11", "circular").values())
    9
    """
    stat = check_statistic(stat)
    partition = as_set_partition(partition)
    entries: Dict[Tuple[int, int], int] = {}
    for (i, first), (j, second) in combinations(
        enumerate(partition.blocks, start=1), 2
    ):
        pair = standardize(first + second, [first, second])
        entries[(i, j)] = cr(pair, stat)
    return entries
