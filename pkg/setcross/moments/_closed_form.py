# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Exact closed forms for the moments of the crossing statistics.

``X_{n,k}`` and ``Y_{n,k}`` are the linear and circular crossing numbers of a
uniform partition of ``[n]`` into k blocks; ``X_n`` and ``Y_n`` are the same
statistics on a uniform partition of ``[n]``. Every value is a
:class:`fractions.Fraction` built from Stirling and Bell numbers, and Stirling
numbers with out-of-range indices are 0.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List

from setcross.exactnum import bell, bell_power_sum, binomial, stirling2
from setcross.utils._check import check_block_range, check_positive_int

__all__: List[str] = [
    "mean_block_circular",
    "mean_block_linear",
    "mean_diff_circular",
    "mean_diff_circular_upper",
    "mean_global_circular",
    "mean_global_linear",
    "second_factorial_block",
    "second_factorial_global",
    "var_block_linear",
    "var_diff_bound",
    "var_global_linear",
]
__author__: List[str] = ["RNKuhns"]


def _ratio(n: int, k: int, m: int, j: int) -> Fraction:
    """Return ``S(m, j) / S(n, k)``."""
    return Fraction(stirling2(m, j), stirling2(n, k))


def _bell_ratio(n: int, shift: int) -> Fraction:
    return Fraction(bell(n + shift), bell(n))


def mean_block_linear(n: int, k: int) -> Fraction:
    """Exact ``E(X_{n,k})``.

    ``n (k-1) / 2 - 5 k (k-1) / 4 + 3 (n+1-k) S(n,k-1) / (2 S(n,k))``.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int
        Number of blocks, ``1 <= k <= n``.

    Returns
    -------
    mean : Fraction

    Examples
    --------
    >>> from setcross.moments import mean_block_linear
    >>> mean_block_linear(4, 2)
    Fraction(1, 7)
    >>> mean_block_linear(6, 1), mean_block_linear(6, 6)
    (Fraction(0, 1), Fraction(0, 1))
    """
    n, k = check_block_range(n, k)
    value = Fraction(n * (k - 1), 2) - Fraction(5 * k * (k - 1), 4)
    return value + Fraction(3 * (n + 1 - k), 2) * _ratio(n, k, n, k - 1)


def mean_block_circular(n: int, k: int) -> Fraction:
    """Exact ``E(Y_{n,k})``.

    ``n (k-1) / 2 - n (4n - 5k + 1) S(n-1,k-1) / (2 S(n,k))
    - n (n-1) S(n-2,k-2) / S(n,k) + C(n,4) S(n-4,k-2) / S(n,k)``.

    Examples
    --------
    >>> from setcross.moments import mean_block_circular
    >>> mean_block_circular(4, 2), mean_block_circular(4, 3)
    (Fraction(1, 7), Fraction(0, 1))
    >>> mean_block_circular(6, 3)
    Fraction(5, 6)
    """
    n, k = check_block_range(n, k)
    value = Fraction(n * (k - 1), 2)
    value -= Fraction(n * (4 * n - 5 * k + 1), 2) * _ratio(n, k, n - 1, k - 1)
    value -= n * (n - 1) * _ratio(n, k, n - 2, k - 2)
    value += binomial(n, 4) * _ratio(n, k, n - 4, k - 2)
    return value


def second_factorial_block(n: int, k: int) -> Fraction:
    """Exact second factorial moment ``E(X_{n,k} (X_{n,k} - 1)) = T''(1) / S(n,k)``.

    Examples
    --------
    >>> from setcross.moments import second_factorial_block
    >>> second_factorial_block(4, 2), second_factorial_block(5, 2)
    (Fraction(0, 1), Fraction(2, 15))
    """
    n, k = check_block_range(n, k)
    value = Fraction((k - 1) ** 2 * n * n, 4)
    value -= Fraction((k - 1) * (15 * k * k - 16 * k + 5) * n, 12)
    value += Fraction(k * (k - 1) * (225 * k * k - 229 * k + 170), 144)
    first = (18 * k - 33) * n * n - (63 * k * k - 137 * k + 79) * n
    first += (k - 1) * (45 * k * k - 73 * k + 20)
    value += Fraction(first, 12) * _ratio(n, k, n, k - 1)
    second = 27 * n * n - (54 * k - 55) * n + (k - 2) * (27 * k - 1)
    value += Fraction(second, 12) * _ratio(n, k, n, k - 2)
    return value


def var_block_linear(n: int, k: int) -> Fraction:
    """Exact ``Var(X_{n,k})``.

    The expression carries a squared Stirling-ratio term, so it is not simply
    linear in the ratios ``S(n,k-1)/S(n,k)`` and ``S(n,k-2)/S(n,k)``.

    Examples
    --------
    >>> from setcross.moments import var_block_linear
    >>> var_block_linear(4, 2)
    Fraction(6, 49)
    >>> var_block_linear(9, 1), var_block_linear(9, 9)
    (Fraction(0, 1), Fraction(0, 1))
    """
    n, k = check_block_range(n, k)
    r1 = _ratio(n, k, n, k - 1)
    r2 = _ratio(n, k, n, k - 2)
    value = Fraction((k * k - 1) * n, 12) - Fraction(k * (k - 1) * (2 * k + 5), 72)
    first = -15 * n * n + (56 * k - 43) * n - 2 * (k - 1) * (14 * k - 1)
    value += Fraction(first, 12) * r1
    value += Fraction((n - k + 2) * (27 * n - 27 * k + 1), 12) * r2
    value -= Fraction(9 * (n + 1 - k) ** 2, 4) * r1 * r1
    return value


def mean_global_linear(n: int) -> Fraction:
    """Exact ``E(X_n)`` from ratios of Bell numbers.

    Examples
    --------
    >>> from setcross.moments import mean_global_linear
    >>> mean_global_linear(4), mean_global_linear(3)
    (Fraction(1, 15), Fraction(0, 1))
    """
    n = check_positive_int(n, "n")
    value = -Fraction(5, 4) * _bell_ratio(n, 2)
    value += (Fraction(n, 2) + Fraction(9, 4)) * _bell_ratio(n, 1)
    return value + Fraction(n, 2) + Fraction(1, 4)


def second_factorial_global(n: int) -> Fraction:
    """Exact ``E(X_n^2 - X_n)`` from ratios of Bell numbers.

    Examples
    --------
    >>> from setcross.moments import second_factorial_global
    >>> second_factorial_global(4), second_factorial_global(5)
    (Fraction(0, 1), Fraction(1, 26))
    """
    n = check_positive_int(n, "n")
    value = Fraction(25, 16) * _bell_ratio(n, 4)
    value -= (Fraction(5 * n, 4) + Fraction(407, 72)) * _bell_ratio(n, 3)
    value += (
        Fraction(n * n, 4) + Fraction(13 * n, 12) + Fraction(223, 48)
    ) * _bell_ratio(n, 2)
    value += (Fraction(n * n, 2) - Fraction(73, 18)) * _bell_ratio(n, 1)
    return value + Fraction(n * n, 4) - Fraction(n, 3) - Fraction(59, 144)


def var_global_linear(n: int) -> Fraction:
    """Exact ``Var(X_n) = E(X_n^2 - X_n) + E(X_n) - E(X_n)^2``.

    Examples
    --------
    >>> from setcross.moments import var_global_linear
    >>> var_global_linear(4)
    Fraction(14, 225)
    """
    mean = mean_global_linear(n)
    return second_factorial_global(n) + mean - mean * mean


def mean_global_circular(n: int) -> Fraction:
    """Exact ``E(Y_n)`` by averaging ``E(Y_{n,k})`` over the block counts.

    Examples
    --------
    >>> from setcross.moments import mean_global_circular
    >>> mean_global_circular(4)
    Fraction(1, 15)
    """
    n = check_positive_int(n, "n")
    total = sum(
        (stirling2(n, k) * mean_block_circular(n, k) for k in range(1, n + 1)),
        Fraction(0),
    )
    return total / bell(n)


def mean_diff_circular(n: int, k: int) -> Fraction:
    """Exact ``E(Y_{n,k} - X_{n,k})``, which lies in ``[0, 2k(k-1)]``.

    Examples
    --------
    >>> from setcross.moments import mean_diff_circular
    >>> mean_diff_circular(4, 2), mean_diff_circular(7, 1)
    (Fraction(0, 1), Fraction(0, 1))
    """
    n, k = check_block_range(n, k)
    value = Fraction(5 * k * (k - 1), 4)
    value -= Fraction(3 * (n + 1 - k), 2) * _ratio(n, k, n, k - 1)
    value -= Fraction(n * (4 * n - 5 * k + 1), 2) * _ratio(n, k, n - 1, k - 1)
    value -= n * (n - 1) * _ratio(n, k, n - 2, k - 2)
    value += binomial(n, 4) * _ratio(n, k, n - 4, k - 2)
    return value


def mean_diff_circular_upper(n: int, k: int) -> Fraction:
    """Upper bound ``5k(k-1)/4 + 5nk S(n-1,k-1)/(2 S(n,k)) + C(n,4) S(n-4,k-2)/S(n,k)``.

    Examples
    --------
    >>> from setcross.moments import mean_diff_circular_upper
    >>> mean_diff_circular_upper(4, 1)
    Fraction(0, 1)
    """
    n, k = check_block_range(n, k)
    value = Fraction(5 * k * (k - 1), 4)
    value += Fraction(5 * n * k, 2) * _ratio(n, k, n - 1, k - 1)
    value += binomial(n, 4) * _ratio(n, k, n - 4, k - 2)
    return value


def var_diff_bound(n: int) -> Fraction:
    """Upper bound on ``Var(Y_n - X_n)`` from weighted Bell numbers.

    ``(5/2 B^(4)_n + 5n B^(3)_(n-1) + 2 C(n,4) B^(2)_(n-4)) / B_n``, where
    ``B^(r)_m = sum_k k^r S(m,k)`` and ``B^(r)_m = 0`` for ``m < 0``.

    Examples
    --------
    >>> from setcross.moments import var_diff_bound
    >>> var_diff_bound(1)
    Fraction(5, 2)
    """
    n = check_positive_int(n, "n")
    total = Fraction(5, 2) * bell_power_sum(n, 4)
    total += 5 * n * bell_power_sum(n - 1, 3)
    total += 2 * binomial(n, 4) * bell_power_sum(n - 4, 2)
    return total / bell(n)
