# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""q-integers, q-factorials and Gaussian binomial coefficients."""
from __future__ import annotations

from functools import lru_cache
from typing import List

from setcross.qpoly._laurent import LaurentPoly
from setcross.utils._check import check_nonnegative_int

__all__: List[str] = ["gaussian_binomial", "q_factorial", "q_integer"]
__author__: List[str] = ["RNKuhns"]


def q_integer(j: int) -> LaurentPoly:
    """Return ``[j]_q = 1 + q + ... + q^(j-1)``.

    Examples
    --------
    >>> from setcross.qpoly import q_integer
    >>> str(q_integer(3)), str(q_integer(0))
    ('1 + q + q^2', '0')
    """
    j = check_nonnegative_int(j, "j")
    return LaurentPoly([1] * j)


@lru_cache(maxsize=None)
def q_factorial(j: int) -> LaurentPoly:
    """Return ``[j]_q! = [1]_q [2]_q ... [j]_q`` with ``[0]_q! = 1``.

    Examples
    --------
    >>> from setcross.qpoly import q_factorial
    >>> str(q_factorial(3))
    '1 + 2q + 2q^2 + q^3'
    """
    j = check_nonnegative_int(j, "j")
    if j == 0:
        return LaurentPoly.one()
    return q_factorial(j - 1) * q_integer(j)


@lru_cache(maxsize=None)
def gaussian_binomial(i: int, j: int) -> LaurentPoly:
    """Gaussian binomial coefficient as a genuine polynomial in q.

    Uses ``[i, j] = [i-1, j-1] + q^j [i-1, j]`` so no division is performed.

    Parameters
    ----------
    i : int
        Nonnegative upper index.
    j : int
        Lower index; 0 is returned when ``j < 0`` or ``j > i``.

    Returns
    -------
    coefficient : LaurentPoly
        The q-analog of ``C(i, j)``.

    Examples
    --------
    >>> from setcross.qpoly import gaussian_binomial
    >>> str(gaussian_binomial(4, 2))
    '1 + q + 2q^2 + q^3 + q^4'
    >>> gaussian_binomial(3, 5).is_zero()
    True
    """
    i = check_nonnegative_int(i, "i")
    if j < 0 or j > i:
        return LaurentPoly.zero()
    if j == 0 or j == i:
        return LaurentPoly.one()
    row = [LaurentPoly.one()]
    for m in range(1, i + 1):
        upper = min(m, j)
        new_row = []
        for r in range(upper + 1):
            left = row[r - 1] if r >= 1 else LaurentPoly.zero()
            right = row[r].shift(r) if r < len(row) else LaurentPoly.zero()
            new_row.append(left + right)
        row = new_row
    return row[j]
