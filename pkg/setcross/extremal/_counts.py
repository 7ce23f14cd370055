# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Numbers of partitions attaining the maximal crossing number."""
from __future__ import annotations

import logging
from typing import List, Optional

from setcross.crossings import cr
from setcross.exactnum import binomial
from setcross.extremal._maxima import max_block, max_global
from setcross.partitions import enumerate_all, enumerate_k
from setcross.utils._check import (
    check_block_range,
    check_positive_int,
    check_statistic,
)

__all__: List[str] = [
    "maximizer_count",
    "maximizer_count_brute",
    "maximizer_count_global",
]
__author__: List[str] = ["RNKuhns"]

logger = logging.getLogger(__name__)


def maximizer_count_brute(
    n: int, k: Optional[int] = None, stat: str = "linear"
) -> int:
    """Count by enumeration the partitions attaining the maximum.

    Parameters
    ----------
    n : int
        Ground-set size, at most ``enumeration_limit``.
    k : int, default=None
        Number of blocks; None counts over all of ``Pi_n``.
    stat : {"linear", "circular"}, default="linear"
        Crossing statistic; this is the only count offered for "circular".

    Examples
    --------
    >>> from setcross.extremal import maximizer_count_brute
    >>> maximizer_count_brute(6, 4), maximizer_count_brute(4, stat="circular")
    (15, 1)
    """
    stat = check_statistic(stat)
    if k is None:
        top = max_global(n, stat)
        stream = enumerate_all(n)
    else:
        top = max_block(n, k, stat)
        stream = enumerate_k(n, k)
    logger.debug("Counting %s maximizers of n=%s, k=%s", stat, n, k)
    return sum(1 for p in stream if cr(p, stat) == top)


def maximizer_count(n: int, k: int) -> int:
    """Number of partitions of ``[n]`` into k blocks with maximal linear crossings.

    There is a single maximizer, ``pi(lambda*)``, for ``k <= floor(n/2)``; from
    ``k = ceil(n/2)`` the maximizers are the ``C(n, 2n - 2k)`` partitions made of
    ``n - k`` pairwise crossing arcs and singletons. Sizes up to 3 are counted
    by enumeration.

    Examples
    --------
    >>> from setcross.extremal import maximizer_count
    >>> maximizer_count(6, 4), maximizer_count(12, 3), maximizer_count(3, 2)
    (15, 1, 3)
    """
    n, k = check_block_range(n, k)
    if n <= 3:
        return maximizer_count_brute(n, k)
    if k <= n // 2:
        return 1
    return binomial(n, 2 * n - 2 * k)


def maximizer_count_global(n: int) -> int:
    """Number of partitions of ``[n]`` with the global maximal linear crossings.

    Examples
    --------
    >>> from setcross.extremal import maximizer_count_global
    >>> maximizer_count_global(9), maximizer_count_global(10), maximizer_count_global(3)
    (2, 1, 5)
    """
    n = check_positive_int(n, "n")
    if n <= 3:
        return maximizer_count_brute(n)
    return 2 if n % 3 == 0 else 1
