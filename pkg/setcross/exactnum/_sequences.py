# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Stirling, Bell, Catalan and Narayana numbers in exact integer arithmetic."""
from __future__ import annotations

import logging
import math
import threading
from typing import List, Tuple

from setcross.utils._check import check_capacity, check_nonnegative_int

__all__: List[str] = [
    "bell",
    "bell_combination_coefficients",
    "bell_power_sum",
    "bell_power_sum_lemma",
    "binomial",
    "catalan",
    "narayana",
    "stirling2",
    "stirling_row",
]
__author__: List[str] = ["RNKuhns"]

logger = logging.getLogger(__name__)

# Row n holds S(n, 0..n). Rows are only ever appended, fully built, under the lock.
_STIRLING_ROWS: List[Tuple[int, ...]] = [(1,)]
_BELL: List[int] = [1]
_TABLE_LOCK = threading.Lock()

_COMBINATION_COEFFICIENTS: List[Tuple[int, ...]] = [(1,)]
_COMBINATION_LOCK = threading.Lock()


def binomial(n: int, k: int) -> int:
    """Binomial coefficient that is 0 outside ``0 <= k <= n``.

    Parameters
    ----------
    n : int
        Upper index; negative values give 0.
    k : int
        Lower index; values below 0 or above `n` give 0.

    Returns
    -------
    value : int
        C(n, k).

    Examples
    --------
    >>> from setcross.exactnum import binomial
    >>> binomial(4, 2), binomial(4, -1), binomial(3, 5)
    (6, 0, 0)
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def stirling_row(n: int) -> Tuple[int, ...]:
    """Return the row ``(S(n,0), ..., S(n,n))`` of the memoized Stirling table.

    Parameters
    ----------
    n : int
        Row index, at most the configured ``stirling_limit``.

    Returns
    -------
    row : tuple of int
        Stirling numbers of the second kind for this `n`.

    Raises
    ------
    CapacityError
        If the table has to grow past ``stirling_limit`` to reach row `n`.
    """
    n = check_nonnegative_int(n, "n")
    if n < len(_STIRLING_ROWS):
        return _STIRLING_ROWS[n]
    check_capacity(n, "stirling_limit", "Stirling table row")
    with _TABLE_LOCK:
        start = len(_STIRLING_ROWS)
        while len(_STIRLING_ROWS) <= n:
            prev = _STIRLING_ROWS[-1]
            m = len(_STIRLING_ROWS)
            row = [0] * (m + 1)
            for k in range(1, m + 1):
                row[k] = prev[k - 1] + (k * prev[k] if k < m else 0)
            _BELL.append(sum(row))
            _STIRLING_ROWS.append(tuple(row))
        if len(_STIRLING_ROWS) > start:
            logger.debug("Stirling table grown to row %d", len(_STIRLING_ROWS) - 1)
    return _STIRLING_ROWS[n]


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k).

    Computed from the recurrence ``S(n,k) = S(n-1,k-1) + k S(n-1,k)`` with a
    memoized triangular table.

    Parameters
    ----------
    n : int
        Ground-set size. Negative values give 0.
    k : int
        Number of blocks. Any integer is accepted.

    Returns
    -------
    value : int
        The number of partitions of an n-set into k blocks, with ``S(0,0) = 1``
        and 0 whenever ``k < 0``, ``k > n`` or ``k = 0 < n``.

    Examples
    --------
    >>> from setcross.exactnum import stirling2
    >>> stirling2(4, 2), stirling2(0, 0), stirling2(5, 7), stirling2(-2, -2)
    (7, 1, 0, 0)
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return stirling_row(n)[k]


def bell(n: int) -> int:
    """Bell number B_n, the row sum of the Stirling table.

    Parameters
    ----------
    n : int
        Ground-set size. Negative values give 0.

    Returns
    -------
    value : int
        Number of set partitions of an n-set.

    Examples
    --------
    >>> from setcross.exactnum import bell
    >>> bell(0), bell(4), bell(9)
    (1, 15, 21147)
    """
    if n < 0:
        return 0
    stirling_row(n)
    return _BELL[n]


def bell_power_sum(n: int, r: int) -> int:
    """Weighted Bell number ``B^(r)_n``, the sum of ``k**r * S(n,k)`` over k.

    Parameters
    ----------
    n : int
        Ground-set size. Negative values give 0.
    r : int
        Nonnegative power. ``r = 0`` returns the Bell number itself.

    Returns
    -------
    value : int
        The direct sum, with ``0**0 = 1``.

    See Also
    --------
    bell_power_sum_lemma : The same value from a Bell-number combination.

    Examples
    --------
    >>> from setcross.exactnum import bell_power_sum
    >>> bell_power_sum(4, 1), bell_power_sum(4, 2), bell_power_sum(4, 0)
    (37, 99, 15)
    """
    r = check_nonnegative_int(r, "r")
    if n < 0:
        return 0
    return sum(k**r * s for k, s in enumerate(stirling_row(n)))


def bell_combination_coefficients(r: int) -> Tuple[int, ...]:
    """Coefficients a_i with ``B^(r)_n = sum_i a_i B_(n+i)``.

    They follow ``a^(0) = (1,)`` and
    ``a^(r+1)_i = a^(r)_(i-1) - sum_(l=i..r) C(r,l) a^(l)_i``.

    Parameters
    ----------
    r : int
        Nonnegative power.

    Returns
    -------
    coefficients : tuple of int
        ``(a_0, ..., a_r)``.

    Examples
    --------
    >>> from setcross.exactnum import bell_combination_coefficients
    >>> bell_combination_coefficients(3)
    (1, 0, -3, 1)
    >>> bell_combination_coefficients(4)
    (1, 4, 0, -4, 1)
    """
    r = check_nonnegative_int(r, "r")
    with _COMBINATION_LOCK:
        while len(_COMBINATION_COEFFICIENTS) <= r:
            level = len(_COMBINATION_COEFFICIENTS) - 1

            def coeff(power: int, i: int) -> int:
                row = _COMBINATION_COEFFICIENTS[power]
                return row[i] if 0 <= i < len(row) else 0

            new_row = []
            for i in range(level + 2):
                value = coeff(level, i - 1)
                value -= sum(
                    math.comb(level, ell) * coeff(ell, i) for ell in range(i, level + 1)
                )
                new_row.append(value)
            _COMBINATION_COEFFICIENTS.append(tuple(new_row))
    return _COMBINATION_COEFFICIENTS[r]


def bell_power_sum_lemma(n: int, r: int) -> int:
    """Weighted Bell number ``B^(r)_n`` computed from shifted Bell numbers.

    Parameters
    ----------
    n : int
        Ground-set size. Negative values give 0.
    r : int
        Nonnegative power.

    Returns
    -------
    value : int
        ``sum_i a_i B_(n+i)`` with the coefficients of
        :func:`bell_combination_coefficients`.
    """
    if n < 0:
        return 0
    coefficients = bell_combination_coefficients(r)
    return sum(a * bell(n + i) for i, a in enumerate(coefficients))


def catalan(n: int) -> int:
    """Catalan number ``C(2n, n) / (n + 1)``.

    Examples
    --------
    >>> from setcross.exactnum import catalan
    >>> catalan(0), catalan(4), catalan(5)
    (1, 14, 42)
    """
    n = check_nonnegative_int(n, "n")
    return math.comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """Narayana number ``C(n,k) C(n,k-1) / n``, the noncrossing count.

    Parameters
    ----------
    n : int
        Ground-set size. ``n = 0`` gives 1 for ``k = 0`` and 0 otherwise.
    k : int
        Number of blocks; 0 outside ``1..n``.

    Returns
    -------
    value : int
        Number of noncrossing partitions of [n] with k blocks.

    Examples
    --------
    >>> from setcross.exactnum import narayana
    >>> narayana(4, 2), narayana(7, 1), sum(narayana(4, k) for k in range(5))
    (6, 1, 14)
    """
    n = check_nonnegative_int(n, "n")
    if n == 0:
        return 1 if k == 0 else 0
    if k < 1 or k > n:
        return 0
    return math.comb(n, k) * math.comb(n, k - 1) // n
