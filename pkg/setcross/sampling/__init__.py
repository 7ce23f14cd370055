# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
""":mod:`setcross.sampling` draws set partitions uniformly at random."""
from typing import List

from setcross.sampling._sampler import (
    SamplerConfig,
    UniformPartitionSampler,
    crossing_histogram,
    partition_from_rank,
    partition_rank,
    sample_uniform,
    sample_uniform_k,
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
