# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Exact distributions of the crossing statistics under the uniform model."""
from __future__ import annotations

from typing import List, Optional

from setcross.distribution._methods import t_poly, t_poly_global
from setcross.distribution._poly import Pmf

__all__: List[str] = ["pmf_block", "pmf_global"]
__author__: List[str] = ["RNKuhns"]


def pmf_block(
    n: int, k: int, stat: str = "linear", method: Optional[str] = None
) -> Pmf:
    """Distribution of the crossing number of a uniform partition of [n] into k blocks.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int
        Number of blocks, ``1 <= k <= n``.
    stat : {"linear", "circular"}, default="linear"
        Crossing statistic; "circular" is computed by enumeration.
    method : str, default=None
        Method used for the distribution polynomial, see
        :func:`~setcross.distribution.t_poly`.

    Returns
    -------
    pmf : Pmf

    Examples
    --------
    >>> from setcross.distribution import pmf_block
    >>> pmf_block(4, 2).as_dict()
    {0: Fraction(6, 7), 1: Fraction(1, 7)}
    >>> pmf_block(5, 5).as_dict()
    {0: Fraction(1, 1)}
    """
    return t_poly(n, k, method, stat).to_pmf()


def pmf_global(n: int, stat: str = "linear", method: Optional[str] = None) -> Pmf:
    """Distribution of the crossing number of a uniform partition of [n].

    Examples
    --------
    >>> from setcross.distribution import pmf_global
    >>> pmf_global(4).as_dict()
    {0: Fraction(14, 15), 1: Fraction(1, 15)}
    """
    return Pmf.from_counts(dict(t_poly_global(n, stat, method).terms()))
