# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Series identities behind the ordinary generating function of Stirling numbers.

With ``G_k(t) = t^k / prod_{i<=k} (1 - i t)``, ``U_k = sum_{i<=k} 1/(1 - i t)``
and ``V_k = sum_{i<=k} 1/(1 - i t)^2``, the coefficient of ``a^k t^n`` is
``S(n, k)`` in ``sum_k a^k G_k``, ``n S(n, k)`` in ``sum_k a^k G_k U_k`` and
``n (n + 1) S(n, k)`` in ``sum_k a^k G_k (U_k^2 + V_k)``.
"""
from __future__ import annotations

import logging
from typing import Dict, List

from setcross.exactnum import stirling2
from setcross.qpoly import LaurentPoly, series_ops

__all__: List[str] = ["lemma_series_identities"]
__author__: List[str] = ["RNKuhns"]

logger = logging.getLogger(__name__)


def lemma_series_identities(order: int) -> Dict[str, bool]:
    """Expand the three series to `order` and compare every coefficient.

    Parameters
    ----------
    order : int
        Truncation order in t, at most the configured ``series_limit``.

    Returns
    -------
    results : dict
        ``{"stirling": bool, "n_stirling": bool, "n_n1_stirling": bool}``,
        True where every coefficient ``[a^k t^n]`` with ``n <= order`` matches.

    Examples
    --------
    >>> from setcross.distribution import lemma_series_identities
    >>> lemma_series_identities(6)
    {'stirling': True, 'n_stirling': True, 'n_n1_stirling': True}
    """
    ops = series_ops(order, max_a_degree=order)
    first, second, third = ops.zero(), ops.zero(), ops.zero()
    product = ops.one()
    u_sum, v_sum = ops.zero(), ops.zero()
    for k in range(order + 1):
        if k:
            product = ops.divide_linear(product, LaurentPoly.constant(k))
            geometric = ops.divide_linear(ops.one(), LaurentPoly.constant(k))
            u_sum = u_sum + geometric
            v_sum = v_sum + ops.mul(geometric, geometric)
        term = ops.scale(product, 1, a_pow=k, t_pow=k)
        first = first + term
        second = second + ops.mul(term, u_sum)
        third = third + ops.mul(term, ops.mul(u_sum, u_sum) + v_sum)

    def matches(series, factor) -> bool:
        return all(
            series.coefficient(n, k) == factor(n) * stirling2(n, k)
            for n in range(order + 1)
            for k in range(order + 1)
        )

    results = {
        "stirling": matches(first, lambda n: 1),
        "n_stirling": matches(second, lambda n: n),
        "n_n1_stirling": matches(third, lambda n: n * (n + 1)),
    }
    logger.info("Stirling series identities to order %d: %s", order, results)
    return results
