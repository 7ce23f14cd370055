# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""The Ferrers-filling construction of extremal partitions and maxima reports."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from setcross.crossings import cr
from setcross.exceptions import FormulaVerificationError
from setcross.extremal._maxima import (
    argmax_blocks,
    lambda_star,
    max_block,
    max_global,
    maximizer_shapes,
)
from setcross.extremal._weights import PartitionShape, as_integer_partition
from setcross.partitions import IntegerPartition, SetPartition, enumerate_all
from setcross.utils._check import check_positive_int, check_statistic

__all__: List[str] = [
    "ExtremalReport",
    "build_pi",
    "global_maximizer_witnesses",
    "maxima_report",
]
__author__: List[str] = ["RNKuhns"]


def build_pi(lam: PartitionShape) -> SetPartition:
    """Fill the Ferrers diagram of `lam` column by column and read off the rows.

    The integers ``1..n`` go into the cells from top to bottom within a column
    and from the leftmost column to the right; row ``i`` becomes a block of
    size ``lam[i]``. The result attains the maximal weight of `lam` for both
    statistics.

    Parameters
    ----------
    lam : IntegerPartition or sequence of int
        Block-size vector.

    Returns
    -------
    partition : SetPartition

    Examples
    --------
    >>> from setcross.extremal import build_pi
    >>> str(build_pi((4, 2, 1)))
    '1 4 6 7/2 5/3'
    >>> str(build_pi((2, 2))), str(build_pi((3,)))
    ('1 3/2 4', '1 2 3')
    """
    lam = as_integer_partition(lam)
    rows: List[List[int]] = [[] for _ in lam.parts]
    label = 0
    for height in lam.conjugate().parts:
        for row in range(height):
            label += 1
            rows[row].append(label)
    return SetPartition.from_blocks(rows, n=lam.n)


def global_maximizer_witnesses(n: int) -> List[SetPartition]:
    """All partitions of ``[n]`` attaining the global linear maximum.

    From ``n = 4`` these are ``pi(lambda*)`` at ``k = n/3`` and ``n/3 + 1``
    when 3 divides `n`, and at ``k = ceil(n/3)`` otherwise. Smaller sizes are
    enumerated.

    Examples
    --------
    >>> from setcross.extremal import global_maximizer_witnesses
    >>> [str(p) for p in global_maximizer_witnesses(6)]
    ['1 3 5/2 4 6', '1 4/2 5/3 6']
    >>> [str(p) for p in global_maximizer_witnesses(7)]
    ['1 4 7/2 5/3 6']
    """
    n = check_positive_int(n, "n")
    if n <= 3:
        return list(enumerate_all(n))
    if n % 3 == 0:
        ks = [n // 3, n // 3 + 1]
    else:
        ks = [-(-n // 3)]
    return [build_pi(lambda_star(n, k)) for k in ks]


@dataclass(frozen=True)
class ExtremalReport:
    """Maximum of a crossing statistic with maximizing shapes and a witness.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int or None
        Number of blocks; None for the maximum over all of ``Pi_n``.
    stat : str
        Crossing statistic.
    max_value : int
        The maximum.
    maximizer_shapes : tuple of IntegerPartition
        Block-size vectors of maximizers (over every maximizing k when `k` is
        None).
    witness : SetPartition
        A partition attaining `max_value`.
    blocks : tuple of int
        Block counts at which the maximum is attained.
    """

    n: int
    k: Optional[int]
    stat: str
    max_value: int
    maximizer_shapes: Tuple[IntegerPartition, ...]
    witness: SetPartition
    blocks: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        value = cr(self.witness, self.stat)
        if value != self.max_value:
            raise FormulaVerificationError(
                f"Witness {self.witness} has {value} {self.stat} crossings, "
                f"not the maximum {self.max_value}."
            )

    def to_json(self) -> Dict[str, Any]:
        """JSON form; the witness uses the partition text format."""
        return {
            "n": self.n,
            "k": self.k,
            "stat": self.stat,
            "max_value": str(self.max_value),
            "maximizer_shapes": [list(shape.parts) for shape in self.maximizer_shapes],
            "witness": str(self.witness),
            "blocks": list(self.blocks),
        }


def maxima_report(
    n: int, k: Optional[int] = None, stat: str = "linear"
) -> ExtremalReport:
    """Build an :class:`ExtremalReport` for ``Pi_n^k``, or for ``Pi_n``.

    Examples
    --------
    >>> from setcross.extremal import maxima_report
    >>> report = maxima_report(7, 3, "circular")
    >>> report.max_value, str(report.witness)
    (6, '1 4 6/2 5 7/3')
    >>> maxima_report(9).blocks
    (3, 4)
    """
    stat = check_statistic(stat)
    if k is not None:
        value = max_block(n, k, stat)
        shapes = tuple(maximizer_shapes(n, k, stat))
        return ExtremalReport(n, k, stat, value, shapes, build_pi(shapes[0]), (k,))
    value = max_global(n, stat)
    ks = tuple(argmax_blocks(n, stat))
    shapes = tuple(shape for kk in ks for shape in maximizer_shapes(n, kk, stat))
    return ExtremalReport(n, None, stat, value, shapes, build_pi(shapes[0]), ks)
