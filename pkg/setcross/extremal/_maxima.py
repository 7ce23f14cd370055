# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Closed forms for the maximal crossing numbers and their maximizing shapes."""
from __future__ import annotations

import logging
from typing import List

from setcross.crossings import cr
from setcross.exactnum import binomial
from setcross.exceptions import FormulaVerificationError
from setcross.partitions import IntegerPartition, enumerate_all
from setcross.utils._check import (
    check_block_range,
    check_positive_int,
    check_statistic,
)

__all__: List[str] = [
    "argmax_blocks",
    "g_sequence",
    "lambda_star",
    "max_block",
    "max_global",
    "maximizer_shapes",
]
__author__: List[str] = ["RNKuhns"]

logger = logging.getLogger(__name__)


def _max_block_linear(n: int, k: int) -> int:
    values = set()
    if k <= n // 2:
        values.add((k - 1) * n - 3 * binomial(k, 2))
    if k >= -(-n // 2):
        values.add(binomial(n - k, 2))
    return _agree(values, n, k, "linear")


def _max_block_circular(n: int, k: int) -> int:
    values = set()
    if 3 * k <= n:
        r = n % k
        values.add((k - 1) * n - r * (k - r))
    if (n <= 3 * k and 2 * k < n) or (n <= 2 * k and k <= n - 6):
        half = (n - k) // 2
        values.add(6 * binomial(half, 2) + 2 * half * ((n - k) % 2))
    if k >= n - 5 and 2 * k >= n:
        values.add(binomial(n - k, 2))
    return _agree(values, n, k, "circular")


def _agree(values: set, n: int, k: int, stat: str) -> int:
    if len(values) != 1:
        raise FormulaVerificationError(
            f"Cases for the {stat} maximum at n={n}, k={k} give {sorted(values)}."
        )
    return values.pop()


def max_block(n: int, k: int, stat: str = "linear") -> int:
    """Largest crossing number over the partitions of ``[n]`` into k blocks.

    Every case of the closed form that applies to ``(n, k)`` is evaluated; the
    cases overlap at ``k = n/3`` for the circular statistic and at ``k = n/2``
    for the linear one, and there they must agree.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int
        Number of blocks, ``1 <= k <= n``.
    stat : {"linear", "circular"}, default="linear"
        Crossing statistic.

    Returns
    -------
    maximum : int

    Raises
    ------
    FormulaVerificationError
        If two applicable cases disagree.

    Examples
    --------
    >>> from setcross.extremal import max_block
    >>> max_block(12, 3), max_block(12, 8)
    (15, 6)
    >>> max_block(10, 5, "circular"), max_block(12, 5, "circular")
    (10, 24)
    """
    n, k = check_block_range(n, k)
    stat = check_statistic(stat)
    if stat == "linear":
        return _max_block_linear(n, k)
    return _max_block_circular(n, k)


def max_global(n: int, stat: str = "linear") -> int:
    """Largest crossing number over all partitions of ``[n]``.

    The circular closed form holds from ``n = 5``; smaller sizes are settled by
    enumeration.

    Examples
    --------
    >>> from setcross.extremal import max_global
    >>> max_global(10), max_global(9), max_global(9, "circular")
    (12, 9, 18)
    >>> max_global(4, "circular")
    1
    """
    n = check_positive_int(n, "n")
    stat = check_statistic(stat)
    if stat == "linear":
        return binomial(n - 1, 2) // 3
    if n < 5:
        logger.debug("Circular maximum of [%d] by enumeration", n)
        return max(cr(p, "circular") for p in enumerate_all(n))
    if n % 3 == 0:
        return 2 * binomial(n - 1, 2) // 3
    return 2 * binomial(n - 2, 2) // 3


def argmax_blocks(n: int, stat: str = "linear") -> List[int]:
    """Block counts k whose maximum equals the global maximum.

    Examples
    --------
    >>> from setcross.extremal import argmax_blocks
    >>> argmax_blocks(9), argmax_blocks(10), argmax_blocks(10, "circular")
    ([3, 4], [4], [3, 4])
    """
    top = max_global(n, stat)
    return [k for k in range(1, n + 1) if max_block(n, k, stat) == top]


def g_sequence(n: int) -> List[int]:
    """Return ``g_n(k) = (k-1) n - r_k (k - r_k)`` for ``k = 1..n``.

    ``r_k`` is the remainder of `n` modulo k. The sequence is strictly
    increasing in k.

    Examples
    --------
    >>> from setcross.extremal import g_sequence
    >>> g_sequence(10)[:4]
    [0, 10, 18, 26]
    """
    n = check_positive_int(n, "n")
    return [(k - 1) * n - (n % k) * (k - n % k) for k in range(1, n + 1)]


def lambda_star(n: int, k: int) -> IntegerPartition:
    """The balanced partition of `n` into k parts, each ``floor(n/k)`` or ``ceil``.

    Examples
    --------
    >>> from setcross.extremal import lambda_star
    >>> lambda_star(7, 3)
    IntegerPartition((3, 2, 2))
    """
    n, k = check_block_range(n, k)
    q, r = divmod(n, k)
    return IntegerPartition([q + 1] * r + [q] * (k - r))


def _shape(ones: int, twos: int, threes: int) -> IntegerPartition:
    return IntegerPartition.from_multiplicities({3: threes, 2: twos, 1: ones})


def maximizer_shapes(n: int, k: int, stat: str = "linear") -> List[IntegerPartition]:
    """Block-size vectors of n into k parts whose weight is maximal.

    For the linear statistic this is always the balanced partition. For the
    circular statistic the balanced partition wins when ``n >= 3k``; below that
    the maximizers only use parts 1, 2 and 3.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int
        Number of parts.
    stat : {"linear", "circular"}, default="linear"
        Crossing statistic.

    Returns
    -------
    shapes : list of IntegerPartition
        One or two shapes, in reverse lexicographic order.

    Examples
    --------
    >>> from setcross.extremal import maximizer_shapes
    >>> [str(s) for s in maximizer_shapes(12, 5, "circular")]
    ['(3,3,3,2,1)']
    >>> [str(s) for s in maximizer_shapes(10, 6, "circular")]
    ['(3,3,1,1,1,1)', '(2,2,2,2,1,1)']
    >>> [str(s) for s in maximizer_shapes(12, 5)]
    ['(3,3,2,2,2)']
    """
    n, k = check_block_range(n, k)
    stat = check_statistic(stat)
    if stat == "linear" or n >= 3 * k:
        return [lambda_star(n, k)]
    extra = n - k
    if extra <= 3 and k >= extra:
        return [_shape(k - extra, extra, 0)]
    if extra <= 5 and k >= extra:
        return sorted(
            [_shape(k - extra, extra, 0), _shape(k - extra + 2, extra - 4, 2)],
            reverse=True,
        )
    j = 3 * k - n
    s = j // 2
    return [_shape(s, j - 2 * s, k - j + s)]
