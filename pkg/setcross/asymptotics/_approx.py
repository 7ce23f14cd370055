# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Leading-term asymptotic approximations and their exact counterparts.

Approximations drop every ``o(1)`` factor and use natural logarithms. Values are
:class:`mpmath.mpf` numbers computed with ``float_digits`` significant digits
from :mod:`setcross.config`.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Union

import mpmath

from setcross.config import get_config
from setcross.exactnum import bell
from setcross.exceptions import PreconditionError
from setcross.moments import var_diff_bound, var_global_linear
from setcross.utils._check import (
    check_block_range,
    check_nonnegative_int,
    check_positive_int,
    check_statistic,
)

__all__: List[str] = [
    "as_mpf",
    "bell_central_diff",
    "bell_central_diff_approx",
    "bell_consecutive_diff",
    "bell_consecutive_diff_approx",
    "bell_ratio",
    "bell_ratio_approx",
    "bell_ratio_shift",
    "bell_ratio_shift_approx",
    "mean_block_approx",
    "mean_global_approx",
    "stirling_approx",
    "var_block_approx",
    "var_global_approx",
    "var_global_circular_bound",
]
__author__: List[str] = ["RNKuhns"]


def _digits() -> int:
    return get_config()["float_digits"]


def as_mpf(value: Union[int, Fraction, mpmath.mpf]) -> mpmath.mpf:
    """Convert an exact value to a ``float_digits``-digit decimal.

    Examples
    --------
    >>> from fractions import Fraction
    >>> from setcross.asymptotics import as_mpf
    >>> import mpmath
    >>> mpmath.nstr(as_mpf(Fraction(1, 7)), 25)
    '0.1428571428571428571428571'
    """
    with mpmath.workdps(_digits()):
        if isinstance(value, Fraction):
            return mpmath.mpf(value.numerator) / value.denominator
        return mpmath.mpf(value)


def _logs(n: int):
    """Return ``(log n, log log n)`` for ``n >= 3``."""
    n = check_positive_int(n, "n")
    if n < 3:
        raise PreconditionError(f"Asymptotic Bell formulas need n >= 3, got {n}.")
    log_n = mpmath.log(n)
    return log_n, mpmath.log(log_n)


def stirling_approx(n: int, k: int) -> mpmath.mpf:
    """Leading term ``k^n / k!`` of ``S(n, k)``, evaluated in the log domain.

    Examples
    --------
    >>> from setcross.asymptotics import stirling_approx
    >>> float(stirling_approx(4, 2)), float(stirling_approx(9, 1))
    (8.0, 1.0)
    """
    n, k = check_block_range(n, k)
    with mpmath.workdps(_digits()):
        return mpmath.exp(n * mpmath.log(k) - mpmath.loggamma(k + 1))


def mean_block_approx(n: int, k: int, stat: str = "linear") -> mpmath.mpf:
    """Leading terms of ``E(X_{n,k})`` or ``E(Y_{n,k})``.

    ``(k-1) n / 2 - 5 k (k-1) / 4`` for the linear statistic and
    ``(k-1) n / 2`` for the circular one.

    Examples
    --------
    >>> from setcross.asymptotics import mean_block_approx
    >>> float(mean_block_approx(100, 3)), float(mean_block_approx(100, 3, "circular"))
    (92.5, 100.0)
    """
    n, k = check_block_range(n, k)
    value = Fraction((k - 1) * n, 2)
    if check_statistic(stat) == "linear":
        value -= Fraction(5 * k * (k - 1), 4)
    return as_mpf(value)


def var_block_approx(n: int, k: int, stat: str = "linear") -> mpmath.mpf:
    """Leading terms of ``Var(X_{n,k})`` or ``Var(Y_{n,k})``.

    ``(k^2 - 1) n / 12 - k (k-1) (2k+5) / 72`` for the linear statistic and
    ``(k^2 - 1) n / 12`` for the circular one.

    Examples
    --------
    >>> from setcross.asymptotics import var_block_approx
    >>> float(var_block_approx(100, 3))
    65.75
    """
    n, k = check_block_range(n, k)
    value = Fraction((k * k - 1) * n, 12)
    if check_statistic(stat) == "linear":
        value -= Fraction(k * (k - 1) * (2 * k + 5), 72)
    return as_mpf(value)


def mean_global_approx(n: int) -> mpmath.mpf:
    """Leading behavior ``n^2 / (2 log n) (1 + log log n / log n)`` of ``E(X_n)``.

    Raises
    ------
    PreconditionError
        If ``n < 3``.
    """
    with mpmath.workdps(_digits()):
        log_n, loglog_n = _logs(n)
        return mpmath.mpf(n) ** 2 / (2 * log_n) * (1 + loglog_n / log_n)


def var_global_approx(n: int) -> mpmath.mpf:
    """Leading behavior of ``Var(X_n)``.

    ``n^3 / (3 log^2 n) (1 + 2 log log n / log n)``; requires ``n >= 3``.
    """
    with mpmath.workdps(_digits()):
        log_n, loglog_n = _logs(n)
        return mpmath.mpf(n) ** 3 / (3 * log_n**2) * (1 + 2 * loglog_n / log_n)


def bell_ratio(n: int, s: int, t: int) -> Fraction:
    """Exact ``B_(n+s+t) / B_(n+s)``.

    Examples
    --------
    >>> from setcross.asymptotics import bell_ratio
    >>> bell_ratio(4, 0, 1), bell_ratio(4, 3, 0)
    (Fraction(52, 15), Fraction(1, 1))
    """
    n = check_nonnegative_int(n, "n")
    return Fraction(bell(n + s + t), bell(n + s))


def bell_ratio_approx(n: int, s: int, t: int) -> mpmath.mpf:
    """``(n / log n)^t (1 + t log log n / log n)``, approximating :func:`bell_ratio`.

    The shift `s` does not enter the leading term.

    Examples
    --------
    >>> from setcross.asymptotics import bell_ratio_approx
    >>> float(bell_ratio_approx(50, 2, 0))
    1.0
    """
    with mpmath.workdps(_digits()):
        log_n, loglog_n = _logs(n)
        return (mpmath.mpf(n) / log_n) ** t * (1 + t * loglog_n / log_n)


def bell_ratio_shift(n: int, s: int, t: int) -> Fraction:
    """Exact ``B_(n+s+t) / B_(n+s) - B_(n+t) / B_n``."""
    return bell_ratio(n, s, t) - bell_ratio(n, 0, t)


def bell_ratio_shift_approx(n: int, s: int, t: int) -> mpmath.mpf:
    """``s t n^(t-1) / (log n)^t (1 + t log log n / log n)``, approximating
    :func:`bell_ratio_shift`."""
    with mpmath.workdps(_digits()):
        log_n, loglog_n = _logs(n)
        value = s * t * mpmath.mpf(n) ** (t - 1) / log_n**t
        return value * (1 + t * loglog_n / log_n)


def bell_central_diff(n: int, u: int) -> Fraction:
    """Exact ``B_(n+u+2) / B_(n+u) - (B_(n+u+1) / B_(n+u))^2``.

    Examples
    --------
    >>> from setcross.asymptotics import bell_central_diff
    >>> bell_central_diff(4, 0)
    Fraction(341, 225)
    """
    first = bell_ratio(n, u, 1)
    return bell_ratio(n, u, 2) - first * first


def bell_central_diff_approx(n: int, u: int) -> mpmath.mpf:
    """``n / (log n)^2 (1 + 2 log log n / log n)``, approximating
    :func:`bell_central_diff` for any fixed `u`."""
    with mpmath.workdps(_digits()):
        log_n, loglog_n = _logs(n)
        return n / log_n**2 * (1 + 2 * loglog_n / log_n)


def bell_consecutive_diff(n: int, u: int) -> Fraction:
    """Exact ``B_(n+u+2) / B_(n+u+1) - B_(n+u+1) / B_(n+u)``."""
    return bell_ratio(n, u + 1, 1) - bell_ratio(n, u, 1)


def bell_consecutive_diff_approx(n: int, u: int) -> mpmath.mpf:
    """``1 / log n (1 + log log n / log n)``, approximating
    :func:`bell_consecutive_diff`."""
    with mpmath.workdps(_digits()):
        log_n, loglog_n = _logs(n)
        return (1 + loglog_n / log_n) / log_n


def var_global_circular_bound(n: int) -> mpmath.mpf:
    """Upper bound on ``Var(Y_n)`` from ``Var(X_n)`` and the bound ``D`` on
    ``Var(Y_n - X_n)``: ``Var(X_n) + D + 2 sqrt(Var(X_n) D)``.

    Examples
    --------
    >>> from setcross.asymptotics import var_global_circular_bound
    >>> float(var_global_circular_bound(1))
    2.5
    """
    variance = var_global_linear(n)
    bound = var_diff_bound(n)
    with mpmath.workdps(_digits()):
        product = as_mpf(variance * bound)
        return as_mpf(variance + bound) + 2 * mpmath.sqrt(product)
