# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Enumerate set partitions in lexicographic order of restricted growth strings.

The enumeration steps from one restricted growth string to the next in place:
the rightmost entry that can grow is raised by the smallest feasible amount and
everything after it is replaced by the smallest feasible completion. Restricting
to exactly k blocks only changes which values are feasible, so both streams use
the same stepping routine. Streams can be split by restricted growth string
prefix (see :func:`rgs_prefixes`); concatenating the streams of all prefixes of
one length reproduces the unsplit stream.
"""
from __future__ import annotations

import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from setcross.exceptions import PartitionValidationError
from setcross.partitions._set_partition import SetPartition, _check_rgs
from setcross.utils._check import check_capacity, check_nonnegative_int

__all__: List[str] = ["enumerate_all", "enumerate_k", "rgs_prefixes"]
__author__: List[str] = ["RNKuhns"]

logger = logging.getLogger(__name__)


def _feasible(used: int, position: int, n: int, k: Optional[int]) -> bool:
    """Whether `used` blocks after `position` can still end with exactly k."""
    return k is None or (used <= k and k - used <= n - position - 1)


def _complete(a: List[int], start: int, used: int, n: int, k: Optional[int]) -> None:
    for index in range(start, n):
        if k is not None and k - max(used, 1) > n - index - 1:
            value = used
        else:
            value = 0
        a[index] = value
        used = max(used, value + 1)


def _rgs_stream(
    n: int, k: Optional[int], prefix: Tuple[int, ...]
) -> Iterator[SetPartition]:
    start = len(prefix)
    used_prefix = max(prefix) + 1 if prefix else 0
    if k is not None and not (used_prefix <= k and k - used_prefix <= n - start):
        return
    a = list(prefix) + [0] * (n - start)
    _complete(a, start, used_prefix, n, k)
    yield SetPartition(a, _validated=True)

    used = [0] * (n + 1)
    while True:
        for i in range(n):
            used[i + 1] = max(used[i], a[i] + 1)
        for i in range(n - 1, start - 1, -1):
            advanced = False
            for value in range(a[i] + 1, used[i] + 1):
                blocks = max(used[i], value + 1)
                if _feasible(blocks, i, n, k):
                    a[i] = value
                    _complete(a, i + 1, blocks, n, k)
                    advanced = True
                    break
            if advanced:
                break
        else:
            return
        yield SetPartition(a, _validated=True)


def _check_prefix(n: int, prefix: Optional[Sequence[int]]) -> Tuple[int, ...]:
    if prefix is None:
        return ()
    values = tuple(int(x) for x in prefix)
    if len(values) > n:
        raise PartitionValidationError(
            f"Prefix {list(values)} is longer than the ground set size {n}."
        )
    _check_rgs(values)
    return values


def enumerate_all(
    n: int, prefix: Optional[Sequence[int]] = None
) -> Iterator[SetPartition]:
    """Iterate over every partition of ``[n]`` exactly once.

    Parameters
    ----------
    n : int
        Ground-set size, at most the configured ``enumeration_limit``.
    prefix : sequence of int, default=None
        Only yield partitions whose restricted growth string starts with this
        canonical prefix.

    Returns
    -------
    partitions : iterator of SetPartition
        Lexicographic in the restricted growth string; ``n = 0`` yields the
        single empty partition.

    Raises
    ------
    CapacityError
        If `n` exceeds ``enumeration_limit``.

    Examples
    --------
    >>> from setcross.partitions import enumerate_all
    >>> [str(p) for p in enumerate_all(3)]
    ['1 2 3', '1 2/3', '1 3/2', '1/2 3', '1/2/3']
    >>> sum(1 for _ in enumerate_all(4))
    15
    """
    n = check_nonnegative_int(n, "n")
    check_capacity(n, "enumeration_limit", "Set partition enumeration")
    prefix_values = _check_prefix(n, prefix)
    logger.debug("Enumerating partitions of [%d] with prefix %s", n, prefix_values)
    return _rgs_stream(n, None, prefix_values)


def enumerate_k(
    n: int, k: int, prefix: Optional[Sequence[int]] = None
) -> Iterator[SetPartition]:
    """Iterate over every partition of ``[n]`` with exactly `k` blocks.

    Parameters
    ----------
    n : int
        Ground-set size, at most the configured ``enumeration_limit``.
    k : int
        Number of blocks. ``k > n``, or ``k = 0 < n``, gives an empty stream.
    prefix : sequence of int, default=None
        Restricted growth string prefix, as in :func:`enumerate_all`.

    Returns
    -------
    partitions : iterator of SetPartition
        Lexicographic in the restricted growth string.

    Examples
    --------
    >>> from setcross.partitions import enumerate_k
    >>> [str(p) for p in enumerate_k(4, 3)]
    ['1 2/3/4', '1 3/2/4', '1/2 3/4', '1 4/2/3', '1/2 4/3', '1/2/3 4']
    >>> sum(1 for _ in enumerate_k(5, 3)), list(enumerate_k(3, 4))
    (25, [])
    """
    n = check_nonnegative_int(n, "n")
    k = check_nonnegative_int(k, "k")
    check_capacity(n, "enumeration_limit", "Set partition enumeration")
    prefix_values = _check_prefix(n, prefix)
    if k > n or (k == 0 and n > 0):
        return iter(())
    logger.debug("Enumerating partitions of [%d] into %d blocks", n, k)
    return _rgs_stream(n, k, prefix_values)


def rgs_prefixes(n: int, depth: int) -> List[Tuple[int, ...]]:
    """Return all canonical restricted growth string prefixes of length `depth`.

    Streams restricted to these prefixes partition the full stream, in order,
    which lets independent workers split an enumeration deterministically.

    Parameters
    ----------
    n : int
        Ground-set size.
    depth : int
        Prefix length; clipped to `n`.

    Examples
    --------
    >>> from setcross.partitions import rgs_prefixes
    >>> rgs_prefixes(5, 2)
    [(0, 0), (0, 1)]
    """
    n = check_nonnegative_int(n, "n")
    depth = min(check_nonnegative_int(depth, "depth"), n)
    return [p.rgs for p in _rgs_stream(depth, None, ())]
