# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Four independent computations of the crossing polynomial ``T_{n,k}(q)``.

* ``ksz`` sums the alternating q-binomial formula in exact rational arithmetic
  and checks that the result is a polynomial.
* ``jr`` sums Gaussian-coefficient terms and divides exactly by
  ``(1 - q)^(n - k)``.
* ``series`` expands the bivariate generating series in ``a`` and ``t`` and
  extracts coefficients.
* ``brute`` enumerates the partitions and histograms the crossing numbers; it
  is the only method for the circular statistic.

Every method is a :class:`~setcross.base.BaseObject` whose tags name the method,
the statistics it supports and the configuration key bounding its input size.
"""
from __future__ import annotations

import logging
import time
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from setcross.base import BaseObject
from setcross.crossings import cr
from setcross.exactnum import bell, binomial
from setcross.exceptions import FormulaVerificationError, PreconditionError
from setcross.extremal._maxima import max_block
from setcross.partitions import enumerate_k
from setcross.qpoly import (
    LaurentPoly,
    RationalFn,
    exact_div,
    gaussian_binomial,
    q_factorial,
    q_integer,
    series_ops,
)
from setcross.distribution._poly import DistPoly
from setcross.utils._check import (
    check_block_range,
    check_capacity,
    check_nonnegative_int,
    check_statistic,
)

__all__: List[str] = [
    "BaseDistributionMethod",
    "BruteForceMethod",
    "JRMethod",
    "KSZMethod",
    "SeriesMethod",
    "get_method",
    "t_poly",
    "t_poly_brute",
    "t_poly_brute_circular",
    "t_poly_global",
    "t_poly_jr",
    "t_poly_ksz",
    "t_table_series",
]
__author__: List[str] = ["RNKuhns"]

logger = logging.getLogger(__name__)

_ONE_MINUS_Q = LaurentPoly([1, -1])


class BaseDistributionMethod(BaseObject):
    """Base class for computations of the distribution polynomial.

    Subclasses implement ``_t_poly(n, k)`` returning a :class:`LaurentPoly`;
    :meth:`t_poly` validates the input, enforces the capacity limit named by the
    ``capacity_config`` tag and wraps the result in a checked
    :class:`DistPoly`.
    """

    _tags = {
        "method": None,
        "statistic": ("linear",),
        "capacity_config": "polynomial_limit",
    }

    def _statistic(self) -> str:
        return "linear"

    def t_poly(self, n: int, k: int) -> DistPoly:
        """Return ``T_{n,k}(q)`` for ``1 <= k <= n``.

        Raises
        ------
        PreconditionError
            If ``k`` is outside ``1..n``.
        CapacityError
            If `n` exceeds the limit named by the ``capacity_config`` tag.
        FormulaVerificationError
            If the computed polynomial violates an invariant.
        """
        n, k = check_block_range(n, k)
        method = self.get_tag("method")
        check_capacity(
            n, self.get_tag("capacity_config"), f"{method} distribution polynomial"
        )
        start = time.perf_counter()
        poly = self._t_poly(n, k)
        logger.debug(
            "T_(%d,%d) by %s in %.4fs", n, k, method, time.perf_counter() - start
        )
        return DistPoly(n, k, poly, method, self._statistic())

    def _t_poly(self, n: int, k: int) -> LaurentPoly:
        raise NotImplementedError("abstract method")


class KSZMethod(BaseDistributionMethod):
    """Alternating sum over j with q-factorial denominators.

    All terms are put over the common denominator ``[k]_q!`` using
    ``1 / ([j]_q! [k-j]_q!) = [k brack j]_q / [k]_q!``. The quotient is formed as
    a :class:`RationalFn` and must reduce to a polynomial.

    Examples
    --------
    >>> from setcross.distribution import KSZMethod
    >>> KSZMethod().t_poly(4, 2).coeffs
    [6, 1]
    """

    _tags = {"method": "ksz"}

    def _t_poly(self, n: int, k: int) -> LaurentPoly:
        numerator = LaurentPoly.zero()
        for j in range(1, k + 1):
            rest = k - j
            inner_sum = LaurentPoly.zero()
            for i in range(rest + 1):
                m = rest - i
                ratio = exact_div(q_factorial(rest), q_factorial(m))
                linear = LaurentPoly.monomial(j, binomial(n, i)) + binomial(n, i - 1)
                inner_sum = inner_sum + (
                    _ONE_MINUS_Q**i * ratio * linear
                ).shift(m * (m + 1) // 2)
            term = q_integer(j) ** n * inner_sum * gaussian_binomial(k, j)
            term = term.shift(-k * j)
            numerator = numerator + (term if rest % 2 == 0 else -term)
        value = RationalFn(numerator, q_factorial(k))
        if not value.is_polynomial() or not value.num.is_polynomial():
            raise FormulaVerificationError(
                f"Alternating sum for T_({n},{k}) left the residue {value}."
            )
        return value.to_laurent()


class JRMethod(BaseDistributionMethod):
    """Gaussian-coefficient double sum divided exactly by ``(1 - q)^(n - k)``.

    Examples
    --------
    >>> from setcross.distribution import JRMethod
    >>> JRMethod().t_poly(4, 2).coeffs
    [6, 1]
    """

    _tags = {"method": "jr"}

    def _t_poly(self, n: int, k: int) -> LaurentPoly:
        total = LaurentPoly.zero()
        for j in range(k + 1):
            for i in range(j, n - k + 1):
                weight = binomial(n, k + i) * binomial(n, k - j)
                weight -= binomial(n, k + i + 1) * binomial(n, k - j - 1)
                if weight:
                    sign = -1 if i % 2 else 1
                    total = total + gaussian_binomial(i, j).shift(
                        j * (j + 1) // 2
                    ) * (sign * weight)
        return exact_div(total, _ONE_MINUS_Q ** (n - k))


@lru_cache(maxsize=8)
def _series_table(nmax: int) -> Dict[Tuple[int, int], LaurentPoly]:
    """Coefficients ``[a^k t^n]`` of the generating series for ``n <= nmax``.

    The k-th summand ``(aqt)^k / prod_i (q^i - q^i [i]_q t + a (1-q)[i]_q t)``
    is rewritten as ``a^k t^k q^(k - k(k+1)/2) prod_i 1 / (1 - c_i t)`` with
    ``c_i = [i]_q + a (1 - q^-i)``, so every coefficient stays an integer
    Laurent polynomial.
    """
    ops = series_ops(nmax, max_a_degree=nmax)
    total = ops.zero()
    product = ops.one()
    for k in range(nmax + 1):
        if k:
            c = {0: q_integer(k), 1: LaurentPoly.one() - LaurentPoly.monomial(-k)}
            product = ops.divide_linear(product, c)
        shift = LaurentPoly.monomial(k - k * (k + 1) // 2)
        total = total + ops.scale(product, shift, a_pow=k, t_pow=k)
    table: Dict[Tuple[int, int], LaurentPoly] = {}
    for n in range(nmax + 1):
        for k in range(n + 1):
            poly = total.coefficient(n, k)
            if not poly.is_polynomial():
                raise FormulaVerificationError(
                    f"Series coefficient of a^{k} t^{n} has negative exponents."
                )
            table[(n, k)] = poly
        for k in range(n + 1, nmax + 1):
            if not total.coefficient(n, k).is_zero():
                raise FormulaVerificationError(
                    f"Series coefficient of a^{k} t^{n} is nonzero with k > n."
                )
    return table


class SeriesMethod(BaseDistributionMethod):
    """Coefficient extraction from the truncated generating series.

    Examples
    --------
    >>> from setcross.distribution import SeriesMethod
    >>> SeriesMethod().t_poly(4, 2).coeffs
    [6, 1]
    >>> SeriesMethod().get_tag("capacity_config")
    'series_limit'
    """

    _tags = {"method": "series", "capacity_config": "series_limit"}

    def _t_poly(self, n: int, k: int) -> LaurentPoly:
        return _series_table(n)[(n, k)]


class BruteForceMethod(BaseDistributionMethod):
    """Histogram of a crossing statistic over all k-block partitions.

    Parameters
    ----------
    stat : {"linear", "circular"}, default="linear"
        Statistic to histogram.

    Examples
    --------
    >>> from setcross.distribution import BruteForceMethod
    >>> BruteForceMethod(stat="circular").t_poly(4, 2).coeffs
    [6, 1]
    >>> BruteForceMethod(stat="circular")
    BruteForceMethod(stat='circular')
    """

    _tags = {
        "method": "brute",
        "statistic": ("linear", "circular"),
        "capacity_config": "enumeration_limit",
    }

    def __init__(self, stat: str = "linear"):
        self.stat = stat
        super().__init__()
        check_statistic(stat)

    def _statistic(self) -> str:
        return self.stat

    def _t_poly(self, n: int, k: int) -> LaurentPoly:
        bound = max_block(n, k, self.stat)
        counts = [0] * (bound + 1)
        for partition in enumerate_k(n, k):
            value = cr(partition, self.stat)
            if value > bound:
                raise FormulaVerificationError(
                    f"{partition} has {value} {self.stat} crossings, above the "
                    f"maximum {bound} for n={n}, k={k}."
                )
            counts[value] += 1
        return LaurentPoly(counts)


_METHODS = {
    "ksz": KSZMethod,
    "jr": JRMethod,
    "series": SeriesMethod,
    "brute": BruteForceMethod,
}


def get_method(method: str, stat: str = "linear") -> BaseDistributionMethod:
    """Instantiate the method object registered under `method`.

    Raises
    ------
    PreconditionError
        If the name is unknown or the method does not support `stat`.
    """
    stat = check_statistic(stat)
    if method not in _METHODS:
        raise PreconditionError(
            f"method must be one of {', '.join(_METHODS)}, got {method!r}."
        )
    cls = _METHODS[method]
    if stat not in cls.get_class_tag("statistic"):
        raise PreconditionError(
            f"The {method} method does not support the {stat} statistic."
        )
    if cls is BruteForceMethod:
        return BruteForceMethod(stat=stat)
    return cls()


def _default_method(stat: str) -> str:
    return "jr" if stat == "linear" else "brute"


def t_poly(
    n: int, k: int, method: Optional[str] = None, stat: str = "linear"
) -> DistPoly:
    """Compute ``T_{n,k}(q)`` with a named method.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int
        Number of blocks, ``1 <= k <= n``.
    method : {"ksz", "jr", "series", "brute"}, default=None
        None picks "jr" for the linear and "brute" for the circular statistic.
    stat : {"linear", "circular"}, default="linear"
        Crossing statistic.

    Returns
    -------
    dist_poly : DistPoly
        The polynomial tagged with the method that produced it.

    Examples
    --------
    >>> from setcross.distribution import t_poly
    >>> t_poly(5, 3).total, t_poly(5, 3, "brute").method
    (25, 'brute')
    >>> t_poly(6, 3, "ksz").poly == t_poly(6, 3, "jr").poly
    True
    """
    stat = check_statistic(stat)
    method = _default_method(stat) if method is None else method
    return get_method(method, stat).t_poly(n, k)


def t_poly_ksz(n: int, k: int) -> DistPoly:
    """``T_{n,k}(q)`` from the alternating q-factorial formula."""
    return KSZMethod().t_poly(n, k)


def t_poly_jr(n: int, k: int) -> DistPoly:
    """``T_{n,k}(q)`` from the Gaussian-coefficient formula.

    Examples
    --------
    >>> from setcross.distribution import t_poly_jr
    >>> t_poly_jr(4, 2).coeffs, t_poly_jr(7, 7).coeffs
    ([6, 1], [1])
    """
    return JRMethod().t_poly(n, k)


def t_poly_brute(n: int, k: int) -> DistPoly:
    """``T_{n,k}(q)`` by enumerating the k-block partitions of ``[n]``."""
    return BruteForceMethod(stat="linear").t_poly(n, k)


def t_poly_brute_circular(n: int, k: int) -> DistPoly:
    """Circular analogue of ``T_{n,k}(q)`` by enumeration."""
    return BruteForceMethod(stat="circular").t_poly(n, k)


def t_table_series(nmax: int) -> Dict[Tuple[int, int], DistPoly]:
    """Extract ``T_{n,k}(q)`` for every ``0 <= k <= n <= nmax`` from one series.

    Parameters
    ----------
    nmax : int
        Largest ground-set size, at most the configured ``series_limit``.

    Returns
    -------
    table : dict
        ``{(n, k): DistPoly}``; ``T_{n,0} = 0`` for ``n >= 1`` and
        ``T_{0,0} = 1``.

    Examples
    --------
    >>> from setcross.distribution import t_table_series
    >>> table = t_table_series(4)
    >>> table[(4, 2)].coeffs, table[(3, 2)].coeffs, table[(4, 0)].coeffs
    ([6, 1], [3], [])
    """
    nmax = check_nonnegative_int(nmax, "nmax")
    check_capacity(nmax, "series_limit", "Series table")
    start = time.perf_counter()
    table = _series_table(nmax)
    logger.debug(
        "Series table to n=%d in %.4fs", nmax, time.perf_counter() - start
    )
    return {
        (n, k): DistPoly(n, k, poly, "series") for (n, k), poly in table.items()
    }


def t_poly_global(
    n: int, stat: str = "linear", method: Optional[str] = None
) -> LaurentPoly:
    """Return ``sum_k T_{n,k}(q)``, the crossing polynomial over all of ``Pi_n``.

    Examples
    --------
    >>> from setcross.distribution import t_poly_global
    >>> str(t_poly_global(4))
    '14 + q'
    """
    n = check_nonnegative_int(n, "n")
    stat = check_statistic(stat)
    if n == 0:
        return LaurentPoly.one()
    total = LaurentPoly.zero()
    for k in range(1, n + 1):
        total = total + t_poly(n, k, method, stat).poly
    if total.evaluate(1) != bell(n):
        raise FormulaVerificationError(
            f"Global crossing polynomial of [{n}] does not sum to B_{n}."
        )
    return total
