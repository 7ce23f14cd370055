# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Kolmogorov distance between standardized exact distributions and the normal."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np
from scipy.special import ndtr

from setcross.distribution import Pmf, pmf_block, pmf_global
from setcross.exceptions import DegenerateDistributionError
from setcross.utils._check import check_statistic

__all__: List[str] = ["GaussianDiagnostic", "gaussian_distance", "kolmogorov_distance"]
__author__: List[str] = ["RNKuhns"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaussianDiagnostic:
    """Distance of a standardized crossing distribution to ``N(0, 1)``.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int or None
        Number of blocks; None for all of ``Pi_n``.
    stat : str
        Crossing statistic.
    kolmogorov_distance : float
        Supremum distance between the two distribution functions, in ``[0, 1]``.
    standardized_mean, standardized_var : float
        Mean and variance of the standardized atoms, close to 0 and 1.
    """

    n: int
    k: Optional[int]
    stat: str
    kolmogorov_distance: float
    standardized_mean: float
    standardized_var: float

    def to_json(self) -> Dict[str, Any]:
        """JSON form."""
        return {
            "n": self.n,
            "k": self.k,
            "stat": self.stat,
            "kolmogorovDistance": self.kolmogorov_distance,
            "standardizedMean": self.standardized_mean,
            "standardizedVar": self.standardized_var,
        }


def _standardized(pmf: Pmf):
    variance = pmf.variance()
    if variance == 0:
        raise DegenerateDistributionError("The distribution is a point mass.")
    mean = pmf.mean()
    atoms = np.array([float(x - mean) for x in pmf.support]) / float(variance) ** 0.5
    return atoms, np.array([float(p) for p in pmf.probs])


def kolmogorov_distance(pmf: Pmf) -> float:
    """Sup distance between the standardized `pmf` and the standard normal CDF.

    The step CDF is compared with the normal CDF on both sides of every atom,
    which is where the supremum is attained.

    Raises
    ------
    DegenerateDistributionError
        If the variance is 0.

    Examples
    --------
    >>> from setcross.asymptotics import kolmogorov_distance
    >>> from setcross.distribution import Pmf
    >>> round(kolmogorov_distance(Pmf.from_counts({0: 1, 1: 1})), 4)
    0.3413
    """
    atoms, probs = _standardized(pmf)
    upper = np.cumsum(probs)
    lower = upper - probs
    normal = ndtr(atoms)
    gaps = np.maximum(np.abs(upper - normal), np.abs(lower - normal))
    return float(min(1.0, gaps.max()))


def gaussian_distance(
    n: int, k: Optional[int] = None, stat: str = "linear"
) -> GaussianDiagnostic:
    """Kolmogorov diagnostic for the exact distribution of the crossing number.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int, default=None
        Number of blocks; None uses a uniform partition of all of ``[n]``.
    stat : {"linear", "circular"}, default="linear"
        Crossing statistic; "circular" needs enumeration.

    Returns
    -------
    diagnostic : GaussianDiagnostic

    Raises
    ------
    DegenerateDistributionError
        If the distribution has zero variance.

    Examples
    --------
    >>> from setcross.asymptotics import gaussian_distance
    >>> round(gaussian_distance(4, 2).kolmogorov_distance, 3)
    0.516
    """
    stat = check_statistic(stat)
    pmf = pmf_global(n, stat) if k is None else pmf_block(n, k, stat)
    if pmf.variance() == 0:
        raise DegenerateDistributionError(
            f"The {stat} crossing number at n={n}, k={k} is constant."
        )
    distance = kolmogorov_distance(pmf)
    atoms, probs = _standardized(pmf)
    standardized_mean = float(np.dot(probs, atoms))
    standardized_var = float(np.dot(probs, atoms**2)) - standardized_mean**2
    logger.debug("Kolmogorov distance at n=%s, k=%s, %s: %.6f", n, k, stat, distance)
    return GaussianDiagnostic(
        n, k, stat, distance, standardized_mean, standardized_var
    )
