# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Maximal crossing weights of block-size vectors.

For an integer partition ``lambda`` the weight ``M(lambda)`` is the largest
crossing number of a set partition whose block sizes are ``lambda``. Both
statistics split over pairs of blocks, so the weight is the sum of the two-block
maxima :func:`max_pair` over all pairs of parts.
"""
from __future__ import annotations

from typing import List, NamedTuple, Sequence, Tuple, Union

from setcross.exactnum import binomial
from setcross.exceptions import PreconditionError
from setcross.partitions import IntegerPartition
from setcross.utils._check import check_positive_int, check_statistic

__all__: List[str] = [
    "MoveDelta",
    "WeightsRT",
    "as_integer_partition",
    "max_pair",
    "move_delta",
    "nonconsecutive_pairs",
    "weight",
    "weight_circular",
    "weight_linear",
    "weights_RT",
]
__author__: List[str] = ["RNKuhns"]

PartitionShape = Union[IntegerPartition, Sequence[int]]


class WeightsRT(NamedTuple):
    """The auxiliary weights with ``M_linear = R - T_linear``."""

    R: int
    T_linear: int
    T_circular: int


class MoveDelta(NamedTuple):
    """Result of moving one unit from a part `v` to a part `u`."""

    partition: IntegerPartition
    delta_R: int
    delta_T_linear: int
    delta_T_circular: int


def as_integer_partition(value: PartitionShape) -> IntegerPartition:
    """Coerce a sequence of positive part sizes, in any order, to a partition."""
    if isinstance(value, IntegerPartition):
        return value
    return IntegerPartition.from_unsorted([int(p) for p in value])


def max_pair(a: int, b: int, stat: str = "linear") -> int:
    """Largest crossing number of a two-block partition with blocks of size a, b.

    Parameters
    ----------
    a, b : int
        Block sizes, at least 1; their order does not matter.
    stat : {"linear", "circular"}, default="linear"
        Crossing statistic.

    Examples
    --------
    >>> from setcross.extremal import max_pair
    >>> max_pair(2, 2), max_pair(7, 1), max_pair(5, 3), max_pair(5, 3, "circular")
    (1, 0, 4, 6)
    >>> max_pair(3, 3), max_pair(3, 3, "circular")
    (3, 6)
    """
    a = check_positive_int(a, "a")
    b = check_positive_int(b, "b")
    stat = check_statistic(stat)
    a, b = max(a, b), min(a, b)
    if b == 1:
        return 0
    if b == 2:
        return 1 if a == 2 else 2
    if stat == "linear":
        return 2 * (b - 1) - (1 if a == b else 0)
    return 2 * b


def weight_linear(lam: PartitionShape) -> int:
    """Largest linear crossing number among partitions with block sizes `lam`.

    Evaluates ``sum_s (2s-3) C(m_s, 2) + sum_{s<t} 2(s-1) m_s m_t`` where
    ``m_s`` is the multiplicity of the part ``s``.

    Examples
    --------
    >>> from setcross.extremal import weight_linear
    >>> weight_linear((2, 2)), weight_linear((1, 1, 1)), weight_linear((4, 2, 1))
    (1, 0, 2)
    """
    m = as_integer_partition(lam).multiplicities()
    sizes = sorted(m)
    total = sum((2 * s - 3) * binomial(m[s], 2) for s in sizes if s >= 2)
    for i, s in enumerate(sizes):
        for t in sizes[i + 1 :]:
            total += 2 * (s - 1) * m[s] * m[t]
    return total


def weight_circular(lam: PartitionShape) -> int:
    """Largest circular crossing number among partitions with block sizes `lam`.

    Examples
    --------
    >>> from setcross.extremal import weight_circular
    >>> weight_circular((3, 3, 3)), weight_circular((2, 2)), weight_circular((5,))
    (18, 1, 0)
    """
    m = as_integer_partition(lam).multiplicities()
    m2 = m.get(2, 0)
    large = sorted(s for s in m if s >= 3)
    total = binomial(m2, 2) + 2 * m2 * sum(m[t] for t in large)
    total += sum(2 * s * binomial(m[s], 2) for s in large)
    for i, s in enumerate(large):
        for t in large[i + 1 :]:
            total += 2 * s * m[s] * m[t]
    return total


def weight(lam: PartitionShape, stat: str = "linear") -> int:
    """Dispatch to :func:`weight_linear` or :func:`weight_circular`."""
    stat = check_statistic(stat)
    return weight_linear(lam) if stat == "linear" else weight_circular(lam)


def weights_RT(lam: PartitionShape) -> WeightsRT:
    """Return ``R``, ``T_linear`` and ``T_circular`` of a partition.

    ``R`` is ``sum_i 2(i-1) lambda_i`` over the parts in nonincreasing order;
    both weights are ``R`` minus the matching ``T``.

    Examples
    --------
    >>> from setcross.extremal import weights_RT
    >>> weights_RT((3, 1))
    WeightsRT(R=2, T_linear=2, T_circular=2)
    >>> weights_RT((2, 2))
    WeightsRT(R=4, T_linear=3, T_circular=3)
    """
    lam = as_integer_partition(lam)
    m = lam.multiplicities()
    k = lam.k
    r_weight = sum(2 * i * part for i, part in enumerate(lam.parts))
    t_linear = sum(binomial(m[s], 2) for s in m if s >= 2) + 2 * binomial(k, 2)
    small = m.get(1, 0) + m.get(2, 0)
    t_circular = 2 * small * k - 2 * binomial(small + 1, 2) + binomial(m.get(2, 0), 2)
    return WeightsRT(r_weight, t_linear, t_circular)


def _moved(lam: IntegerPartition, u: int, v: int) -> IntegerPartition:
    parts = list(lam.parts)
    # parts are nonincreasing: rightmost v and leftmost u
    right_v = max(i for i, p in enumerate(parts) if p == v)
    left_u = min(i for i, p in enumerate(parts) if p == u)
    parts[right_v] -= 1
    parts[left_u] += 1
    return IntegerPartition(parts)


def move_delta(lam: PartitionShape, u: int, v: int) -> MoveDelta:
    """Move one unit from a part `v` to a part `u` and predict the weight changes.

    The rightmost part equal to `v` is decreased and the leftmost part equal to
    `u` is increased, which keeps the parts nonincreasing. The changes of ``R``,
    ``T_linear`` and ``T_circular`` are given in closed form from the
    multiplicities of `lam`.

    Parameters
    ----------
    lam : IntegerPartition or sequence of int
        Partition containing both `u` and `v`.
    u, v : int
        Part sizes with ``v - u >= 2``.

    Returns
    -------
    move : MoveDelta
        The moved partition and the three deltas.

    Raises
    ------
    PreconditionError
        If `u` or `v` is not a part of `lam` or ``v - u < 2``.

    Examples
    --------
    >>> from setcross.extremal import move_delta
    >>> move = move_delta((3, 1), 1, 3)
    >>> str(move.partition), move.delta_R, move.delta_T_linear, move.delta_T_circular
    ('(2,2)', 2, 1, 1)
    >>> move_delta((4, 1), 1, 4).delta_T_circular
    0
    """
    lam = as_integer_partition(lam)
    m = lam.multiplicities()
    if v - u < 2 or not m.get(u) or not m.get(v):
        raise PreconditionError(
            f"{lam} must contain parts u={u} and v={v} with v - u >= 2."
        )

    def mult(s: int) -> int:
        return m.get(s, 0)

    k = lam.k
    delta_r = 2 * (1 + sum(mult(t) for t in range(u + 1, v)))
    delta_tl = 2 - mult(u) + mult(u + 1) + mult(v - 1) - mult(v)
    delta_tl += (1 if u + 1 == v - 1 else 0) + ((mult(u) - 1) if u == 1 else 0)
    if u == 1 and v == 3:
        delta_tc = 2 * (k - mult(1)) - 1
    elif u == 1:
        delta_tc = mult(2)
    elif u == 2:
        delta_tc = -2 * (k - mult(1)) + mult(2) + 1
    else:
        delta_tc = 0
    return MoveDelta(_moved(lam, u, v), delta_r, delta_tl, delta_tc)


def nonconsecutive_pairs(lam: PartitionShape) -> List[Tuple[int, int]]:
    """Pairs ``u < v`` of distinct part sizes of `lam` with ``v - u >= 2``.

    Examples
    --------
    >>> from setcross.extremal import nonconsecutive_pairs
    >>> nonconsecutive_pairs((5, 3, 2, 1))
    [(1, 3), (1, 5), (2, 5), (3, 5)]
    """
    sizes = sorted(set(as_integer_partition(lam).parts))
    return [(u, v) for i, u in enumerate(sizes) for v in sizes[i + 1 :] if v - u >= 2]
