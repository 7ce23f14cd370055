# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Exact uniform sampling of set partitions.

A sample is drawn as a single uniform integer below ``S(n,k)`` (or ``B_n``)
and unranked along the recurrence ``S(m,j) = S(m-1,j-1) + j S(m-1,j)``, read
from the largest element down. The random integer is assembled from raw 64-bit
words of a ``PCG64`` generator and accepted by rejection, so no floating point
threshold is involved.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from setcross.base import BaseObject
from setcross.crossings import cr
from setcross.exactnum import bell, stirling2
from setcross.exceptions import PreconditionError
from setcross.partitions import SetPartition, as_set_partition
from setcross.partitions._set_partition import PartitionLike
from setcross.utils._check import (
    check_block_range,
    check_nonnegative_int,
    check_positive_int,
    check_statistic,
)

__all__: List[str] = [
    "SamplerConfig",
    "UniformPartitionSampler",
    "crossing_histogram",
    "partition_from_rank",
    "partition_rank",
    "sample_uniform",
    "sample_uniform_k",
]
__author__: List[str] = ["RNKuhns"]

logger = logging.getLogger(__name__)

_WORD_BITS = 64
_SEED_BOUND = 1 << 64


def partition_from_rank(n: int, k: int, rank: int) -> SetPartition:
    """Return the partition of ``[n]`` into `k` blocks with the given rank.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int
        Number of blocks, ``1 <= k <= n``.
    rank : int
        Integer in ``[0, S(n,k))``.

    Returns
    -------
    partition : SetPartition

    Raises
    ------
    PreconditionError
        If ``(n, k)`` is out of range or `rank` is not below ``S(n,k)``.

    See Also
    --------
    partition_rank :
        The inverse map.

    Examples
    --------
    >>> from setcross.sampling import partition_from_rank
    >>> [str(partition_from_rank(4, 2, r)) for r in (0, 6)]
    ['1 2 3/4', '1/2 3 4']
    """
    n, k = check_block_range(n, k)
    rank = check_nonnegative_int(rank, "rank")
    if rank >= stirling2(n, k):
        raise PreconditionError(
            f"rank must be below S({n},{k}) = {stirling2(n, k)}, got {rank}."
        )
    # -1 marks an element opening a new block
    choices = [0] * n
    j = k
    for m in range(n, 0, -1):
        opens = stirling2(m - 1, j - 1)
        if rank < opens:
            choices[m - 1] = -1
            j -= 1
        else:
            choices[m - 1], rank = divmod(rank - opens, stirling2(m - 1, j))

    rgs = []
    blocks = 0
    for choice in choices:
        if choice < 0:
            rgs.append(blocks)
            blocks += 1
        else:
            rgs.append(choice)
    return SetPartition.from_rgs(rgs)


def partition_rank(partition: PartitionLike) -> int:
    """Rank of a partition among those with the same size and block count.

    Examples
    --------
    >>> from setcross.sampling import partition_rank
    >>> partition_rank("1/2 3 4"), partition_rank("1 2 3/4")
    (6, 0)
    """
    partition = as_set_partition(partition)
    rank = 0
    blocks = 0
    for m, label in enumerate(partition.rgs, start=1):
        if label == blocks:
            blocks += 1
        else:
            rank += stirling2(m - 1, blocks - 1) + label * stirling2(m - 1, blocks)
    return rank


def _check_seed(seed: Optional[int]) -> Optional[int]:
    if seed is None:
        return None
    seed = check_nonnegative_int(seed, "seed")
    if seed >= _SEED_BOUND:
        raise PreconditionError(f"seed must fit in 64 unsigned bits, got {seed}.")
    return seed


class UniformPartitionSampler(BaseObject):
    """Draw set partitions of ``[n]`` uniformly at random.

    Parameters
    ----------
    n : int, default=1
        Ground-set size.
    k : int, default=None
        Number of blocks. When None the sample is uniform over all
        partitions of ``[n]``, so the number of blocks has probability
        ``S(n,k) / B_n``.
    seed : int, default=None
        Unsigned 64-bit seed. None draws fresh entropy from the OS.
    stream : int, default=0
        Index of an independent stream spawned from `seed`. Samplers with the
        same seed and different streams do not share random words.

    Attributes
    ----------
    rng_ : numpy.random.Generator or None
        Generator created on the first draw.

    Examples
    --------
    >>> from setcross.sampling import UniformPartitionSampler
    >>> sampler = UniformPartitionSampler(n=5, k=5, seed=3)
    >>> [str(p) for p in sampler.sample_many(2)]
    ['1/2/3/4/5', '1/2/3/4/5']
    >>> sampler
    UniformPartitionSampler(k=5, n=5, seed=3)
    """

    _tags = {"uniform": True, "capacity_key": "stirling_limit"}

    def __init__(
        self,
        n: int = 1,
        k: Optional[int] = None,
        seed: Optional[int] = None,
        stream: int = 0,
    ):
        self.n = n
        self.k = k
        self.seed = seed
        self.stream = stream
        super().__init__()
        self._check_params()
        self.rng_: Optional[np.random.Generator] = None

    def _check_params(self) -> Tuple[int, Optional[int]]:
        if self.k is None:
            n, k = check_positive_int(self.n, "n"), None
        else:
            n, k = check_block_range(self.n, self.k)
        _check_seed(self.seed)
        check_nonnegative_int(self.stream, "stream")
        return n, k

    def _reset_state(self) -> None:
        self._check_params()
        self.rng_ = None

    def _generator(self) -> np.random.Generator:
        if self.rng_ is None:
            seed_seq = np.random.SeedSequence(self.seed, spawn_key=(self.stream,))
            self.rng_ = np.random.Generator(np.random.PCG64(seed_seq))
            logger.debug(
                "Sampler generator seeded with entropy %s, stream %d",
                seed_seq.entropy,
                self.stream,
            )
        return self.rng_

    def uniform_below(self, bound: int) -> int:
        """Draw an integer uniformly from ``[0, bound)`` without bias.

        Parameters
        ----------
        bound : int
            Positive exclusive upper bound of any size.

        Returns
        -------
        value : int
        """
        bound = check_positive_int(bound, "bound")
        if bound == 1:
            return 0
        bits = (bound - 1).bit_length()
        words = -(-bits // _WORD_BITS)
        excess = words * _WORD_BITS - bits
        bit_generator = self._generator().bit_generator
        while True:
            value = 0
            for word in bit_generator.random_raw(words).tolist():
                value = (value << _WORD_BITS) | word
            value >>= excess
            if value < bound:
                return value

    def sample(self) -> SetPartition:
        """Draw one partition."""
        n, k = self._check_params()
        if k is not None:
            return partition_from_rank(n, k, self.uniform_below(stirling2(n, k)))
        rank = self.uniform_below(bell(n))
        for blocks in range(1, n + 1):
            count = stirling2(n, blocks)
            if rank < count:
                return partition_from_rank(n, blocks, rank)
            rank -= count
        raise AssertionError("Rank exceeded the Bell number.")

    def sample_many(self, count: int) -> List[SetPartition]:
        """Draw `count` partitions in sequence."""
        count = check_nonnegative_int(count, "count")
        return [self.sample() for _ in range(count)]


def sample_uniform_k(n: int, k: int, seed: Optional[int] = None) -> SetPartition:
    """Draw one partition of ``[n]`` into `k` blocks uniformly at random.

    Examples
    --------
    >>> from setcross.sampling import sample_uniform_k
    >>> str(sample_uniform_k(4, 1, seed=0))
    '1 2 3 4'
    """
    return UniformPartitionSampler(n=n, k=k, seed=seed).sample()


def sample_uniform(n: int, seed: Optional[int] = None) -> SetPartition:
    """Draw one partition of ``[n]`` uniformly at random.

    Examples
    --------
    >>> from setcross.sampling import sample_uniform
    >>> str(sample_uniform(1, seed=5))
    '1'
    """
    return UniformPartitionSampler(n=n, seed=seed).sample()


def crossing_histogram(
    sampler: UniformPartitionSampler, count: int, stat: str = "linear"
) -> Dict[int, int]:
    """Count crossing numbers over `count` draws of `sampler`.

    Returns
    -------
    histogram : dict of int to int
        Crossing number mapped to how many draws had it, sorted by value.
    """
    stat = check_statistic(stat)
    count = check_nonnegative_int(count, "count")
    values = np.fromiter(
        (cr(sampler.sample(), stat) for _ in range(count)), dtype=np.int64, count=count
    )
    counts = np.bincount(values) if count else np.zeros(0, dtype=np.int64)
    return {int(x): int(c) for x, c in enumerate(counts) if c}


@dataclass(frozen=True)
class SamplerConfig:
    """A validated sampling request.

    Parameters
    ----------
    n : int
    k : int or None
    seed : int
        Unsigned 64-bit seed.
    count : int
        Number of draws, at least 1.
    """

    n: int
    k: Optional[int]
    seed: int
    count: int = 1

    def __post_init__(self):
        if self.k is None:
            check_positive_int(self.n, "n")
        else:
            check_block_range(self.n, self.k)
        if self.seed is None:
            raise PreconditionError("SamplerConfig requires an integer seed.")
        _check_seed(self.seed)
        check_positive_int(self.count, "count")

    def build(self) -> UniformPartitionSampler:
        """Sampler for this request."""
        return UniformPartitionSampler(n=self.n, k=self.k, seed=self.seed)

    def draw(self) -> List[SetPartition]:
        """All `count` samples of this request."""
        return self.build().sample_many(self.count)
