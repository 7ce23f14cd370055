# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Moment reports computed by closed form, from polynomials or by enumeration."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

from setcross.crossings import cr
from setcross.distribution import Pmf, t_poly, t_poly_global
from setcross.exactnum import bell, stirling2
from setcross.exceptions import PreconditionError
from setcross.moments._closed_form import (
    mean_block_circular,
    mean_block_linear,
    mean_global_circular,
    mean_global_linear,
    second_factorial_block,
    second_factorial_global,
    var_block_linear,
    var_global_linear,
)
from setcross.partitions import enumerate_all, enumerate_k
from setcross.utils._check import (
    check_block_range,
    check_capacity,
    check_positive_int,
    check_statistic,
)
from setcross.utils._serialize import rational_to_json

__all__: List[str] = ["MOMENT_METHODS", "MomentReport", "moment_report"]
__author__: List[str] = ["RNKuhns"]

logger = logging.getLogger(__name__)

MOMENT_METHODS = ("closed_form", "from_poly", "brute")


@dataclass(frozen=True)
class MomentReport:
    """Mean, variance and second factorial moment of a crossing statistic.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int or None
        Number of blocks; None for a uniform partition of all of ``[n]``.
    stat : str
        Crossing statistic.
    mean : Fraction
    variance : Fraction or None
        None where no closed form exists (the circular statistic).
    second_factorial : Fraction or None
        ``E(Z (Z - 1))``; None where no closed form exists.
    method : str
        One of "closed_form", "from_poly" or "brute".
    """

    n: int
    k: Optional[int]
    stat: str
    mean: Fraction
    variance: Optional[Fraction]
    second_factorial: Optional[Fraction]
    method: str

    def __post_init__(self):
        if self.variance is not None and self.variance < 0:
            raise PreconditionError(f"Negative variance {self.variance}.")

    def to_json(self) -> Dict[str, Any]:
        """JSON form with rationals as ``{"num", "den"}`` decimal strings."""
        return {
            "n": self.n,
            "k": self.k,
            "stat": self.stat,
            "method": self.method,
            "mean": rational_to_json(self.mean),
            "variance": rational_to_json(self.variance),
            "secondFactorial": rational_to_json(self.second_factorial),
        }


def _closed_form(n: int, k: Optional[int], stat: str) -> MomentReport:
    if k is None:
        if stat == "linear":
            return MomentReport(
                n,
                None,
                stat,
                mean_global_linear(n),
                var_global_linear(n),
                second_factorial_global(n),
                "closed_form",
            )
        return MomentReport(
            n, None, stat, mean_global_circular(n), None, None, "closed_form"
        )
    if stat == "linear":
        return MomentReport(
            n,
            k,
            stat,
            mean_block_linear(n, k),
            var_block_linear(n, k),
            second_factorial_block(n, k),
            "closed_form",
        )
    mean = mean_block_circular(n, k)
    return MomentReport(n, k, stat, mean, None, None, "closed_form")


def _from_poly(n: int, k: Optional[int], stat: str) -> MomentReport:
    if k is None:
        poly = t_poly_global(n, stat)
        total = bell(n)
    else:
        poly = t_poly(n, k, stat=stat).poly
        total = stirling2(n, k)
    first = poly.derivative()
    mean = Fraction(first.evaluate(1), total)
    second = Fraction(first.derivative().evaluate(1), total)
    return MomentReport(
        n, k, stat, mean, second + mean - mean * mean, second, "from_poly"
    )


def _brute(n: int, k: Optional[int], stat: str) -> MomentReport:
    check_capacity(n, "enumeration_limit", "Enumeration of moments")
    stream = enumerate_all(n) if k is None else enumerate_k(n, k)
    counts: Dict[int, int] = {}
    for partition in stream:
        value = cr(partition, stat)
        counts[value] = counts.get(value, 0) + 1
    pmf = Pmf.from_counts(counts)
    mean = pmf.mean()
    second = pmf.moment(2) - mean
    return MomentReport(n, k, stat, mean, pmf.variance(), second, "brute")


_BUILDERS = {"closed_form": _closed_form, "from_poly": _from_poly, "brute": _brute}


def moment_report(
    n: int,
    k: Optional[int] = None,
    stat: str = "linear",
    method: str = "closed_form",
) -> MomentReport:
    """Build a :class:`MomentReport` for ``Pi_n^k``, or for ``Pi_n``.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int, default=None
        Number of blocks; None for all of ``Pi_n``.
    stat : {"linear", "circular"}, default="linear"
        Crossing statistic.
    method : {"closed_form", "from_poly", "brute"}, default="closed_form"
        "from_poly" differentiates the distribution polynomial; for the
        circular statistic that polynomial comes from enumeration.

    Returns
    -------
    report : MomentReport

    Examples
    --------
    >>> from setcross.moments import moment_report
    >>> report = moment_report(4, 2)
    >>> report.mean, report.variance
    (Fraction(1, 7), Fraction(6, 49))
    >>> moment_report(4, method="brute").variance
    Fraction(14, 225)
    >>> moment_report(4, stat="circular").variance is None
    True
    """
    n = check_positive_int(n, "n")
    if k is not None:
        n, k = check_block_range(n, k)
    stat = check_statistic(stat)
    if method not in _BUILDERS:
        raise PreconditionError(
            f"method must be one of {', '.join(MOMENT_METHODS)}, got {method!r}."
        )
    logger.debug("Moments of n=%s, k=%s, %s by %s", n, k, stat, method)
    return _BUILDERS[method](n, k, stat)
