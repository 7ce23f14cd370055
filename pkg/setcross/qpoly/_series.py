# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Power series in t, truncated at a fixed order, with coefficients in Z[a][q, 1/q].

A :class:`TruncatedSeries` stores, for every power of t up to its order, a sparse
map from the power of a to a :class:`LaurentPoly` in q. Arithmetic on the values
themselves truncates at the smaller order; :class:`SeriesContext` additionally
truncates the a-degree, which keeps the generating series of set partitions
small when only the coefficient of ``a^k`` is needed.
"""
from __future__ import annotations

import logging
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple, Union

from setcross.base import BaseObject
from setcross.exceptions import NotInvertibleError, PreconditionError
from setcross.qpoly._laurent import LaurentPoly
from setcross.utils._check import check_capacity, check_nonnegative_int

__all__: List[str] = ["SeriesContext", "TruncatedSeries", "series_ops"]
__author__: List[str] = ["RNKuhns"]

logger = logging.getLogger(__name__)

ADegreeMap = Dict[int, LaurentPoly]
CoeffLike = Union[LaurentPoly, int]


def _add_maps(
    x: Mapping[int, LaurentPoly], y: Mapping[int, LaurentPoly]
) -> ADegreeMap:
    out = dict(x)
    for a_pow, poly in y.items():
        total = out.get(a_pow, LaurentPoly.zero()) + poly
        if total.is_zero():
            out.pop(a_pow, None)
        else:
            out[a_pow] = total
    return out


def _scale_map(
    x: Mapping[int, LaurentPoly], poly: LaurentPoly, a_shift: int = 0
) -> ADegreeMap:
    if poly.is_zero():
        return {}
    return {a_pow + a_shift: c * poly for a_pow, c in x.items()}


def _mul_maps(
    x: Mapping[int, LaurentPoly],
    y: Mapping[int, LaurentPoly],
    max_a_degree: Optional[int],
) -> ADegreeMap:
    out: ADegreeMap = {}
    for a_x, c_x in x.items():
        for a_y, c_y in y.items():
            a_pow = a_x + a_y
            if max_a_degree is not None and a_pow > max_a_degree:
                continue
            total = out.get(a_pow, LaurentPoly.zero()) + c_x * c_y
            if total.is_zero():
                out.pop(a_pow, None)
            else:
                out[a_pow] = total
    return out


def _cut_a(x: Mapping[int, LaurentPoly], max_a_degree: Optional[int]) -> ADegreeMap:
    if max_a_degree is None:
        return dict(x)
    return {a_pow: c for a_pow, c in x.items() if a_pow <= max_a_degree}


class TruncatedSeries:
    """Immutable series ``sum_{m <= order} sum_i c_{m,i}(q) a^i t^m``.

    Parameters
    ----------
    order : int
        Highest power of t that is kept.
    coeffs : sequence of mapping, default=()
        Entry ``m`` maps a-degrees to the q-coefficient of ``t^m``. Entries
        beyond `order` are dropped and zero coefficients are removed.

    Examples
    --------
    >>> from setcross.qpoly import LaurentPoly, TruncatedSeries
    >>> s = TruncatedSeries(2, [{0: LaurentPoly.one()}, {1: LaurentPoly([0, 1])}])
    >>> str(s)
    '1 + (q) a t'
    >>> s.coefficient(1, 1) == LaurentPoly.monomial(1)
    True
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs=()):
        self._order = check_nonnegative_int(order, "order")
        entries = list(coeffs)[: self._order + 1]
        entries += [{}] * (self._order + 1 - len(entries))
        self._coeffs: Tuple[ADegreeMap, ...] = tuple(
            {
                int(a_pow): poly
                for a_pow, poly in (
                    (a, LaurentPoly._coerce(c)) for a, c in dict(entry).items()
                )
                if poly is not None and not poly.is_zero()
            }
            for entry in entries
        )

    @property
    def order(self) -> int:
        """Highest retained power of t."""
        return self._order

    def coefficient(self, t_pow: int, a_pow: int = 0) -> LaurentPoly:
        """Return the q-polynomial multiplying ``a^a_pow t^t_pow``."""
        if not 0 <= t_pow <= self._order:
            return LaurentPoly.zero()
        return self._coeffs[t_pow].get(a_pow, LaurentPoly.zero())

    def t_coefficient(self, t_pow: int) -> ADegreeMap:
        """Return a copy of the a-degree map of ``t^t_pow``."""
        if not 0 <= t_pow <= self._order:
            return {}
        return dict(self._coeffs[t_pow])

    def terms(self) -> Iterator[Tuple[int, int, LaurentPoly]]:
        """Yield ``(t_pow, a_pow, coefficient)`` for every nonzero coefficient."""
        for t_pow, entry in enumerate(self._coeffs):
            for a_pow in sorted(entry):
                yield t_pow, a_pow, entry[a_pow]

    def is_zero(self) -> bool:
        """Whether every coefficient vanishes."""
        return not any(self._coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        """Drop every power of t above `order`."""
        return TruncatedSeries(min(order, self._order), self._coeffs)

    def to_json(self) -> Dict[str, Any]:
        """JSON form listing the nonzero terms."""
        return {
            "order": self._order,
            "terms": [
                {"t": t_pow, "a": a_pow, "coeff": poly.to_json()}
                for t_pow, a_pow, poly in self.terms()
            ],
        }

    @staticmethod
    def _coerce(other: Any, order: int) -> Optional[TruncatedSeries]:
        if isinstance(other, TruncatedSeries):
            return other
        poly = LaurentPoly._coerce(other)
        if poly is None:
            return None
        return TruncatedSeries(order, [{0: poly}])

    def __add__(self, other: Any) -> TruncatedSeries:
        rhs = self._coerce(other, self._order)
        if rhs is None:
            return NotImplemented
        order = min(self._order, rhs._order)
        return TruncatedSeries(
            order,
            [_add_maps(self._coeffs[m], rhs._coeffs[m]) for m in range(order + 1)],
        )

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(
            self._order,
            [{a: -c for a, c in entry.items()} for entry in self._coeffs],
        )

    def __sub__(self, other: Any) -> TruncatedSeries:
        rhs = self._coerce(other, self._order)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> TruncatedSeries:
        lhs = self._coerce(other, self._order)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: Any) -> TruncatedSeries:
        rhs = self._coerce(other, self._order)
        if rhs is None:
            return NotImplemented
        return _multiply(self, rhs, min(self._order, rhs._order), None)

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        rhs = self._coerce(other, self._order)
        if rhs is None:
            return NotImplemented
        return self._order == rhs._order and self._coeffs == rhs._coeffs

    def __hash__(self) -> int:
        frozen = tuple(tuple(sorted(entry.items())) for entry in self._coeffs)
        return hash((self._order, frozen))

    def __str__(self) -> str:
        pieces = []
        for t_pow, a_pow, poly in self.terms():
            factors = [] if poly == 1 else [f"({poly})"]
            if a_pow:
                factors.append("a" if a_pow == 1 else f"a^{a_pow}")
            if t_pow:
                factors.append("t" if t_pow == 1 else f"t^{t_pow}")
            pieces.append(" ".join(factors) if factors else "1")
        return " + ".join(pieces) if pieces else "0"

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self._order}, terms={len(list(self.terms()))})"


def _multiply(
    x: TruncatedSeries,
    y: TruncatedSeries,
    order: int,
    max_a_degree: Optional[int],
) -> TruncatedSeries:
    out: List[ADegreeMap] = [{} for _ in range(order + 1)]
    for i in range(order + 1):
        x_i = x._coeffs[i]
        if not x_i:
            continue
        for j in range(order + 1 - i):
            y_j = y._coeffs[j]
            if y_j:
                out[i + j] = _add_maps(out[i + j], _mul_maps(x_i, y_j, max_a_degree))
    return TruncatedSeries(order, out)


class SeriesContext(BaseObject):
    """Arithmetic on :class:`TruncatedSeries` at a fixed truncation.

    Every result has order `order` and, when `max_a_degree` is set, no power of
    a above it.

    Parameters
    ----------
    order : int
        Highest retained power of t.
    max_a_degree : int or None, default=None
        Highest retained power of a; None keeps every power.

    Examples
    --------
    >>> from setcross.qpoly import q_integer, series_ops
    >>> ops = series_ops(2)
    >>> s = ops.reciprocal(ops.from_terms({(0, 0): 1, (1, 0): -q_integer(2)}))
    >>> str(s)
    '1 + (1 + q) t + (1 + 2q + q^2) t^2'
    >>> ops
    SeriesContext(order=2)
    """

    def __init__(self, order: int = 0, max_a_degree: Optional[int] = None):
        self.order = order
        self.max_a_degree = max_a_degree
        super().__init__()
        check_nonnegative_int(order, "order")
        if max_a_degree is not None:
            check_nonnegative_int(max_a_degree, "max_a_degree")

    def _finish(self, coeffs) -> TruncatedSeries:
        return TruncatedSeries(
            self.order, [_cut_a(entry, self.max_a_degree) for entry in coeffs]
        )

    def coerce(self, value: Any) -> TruncatedSeries:
        """Bring a series or a constant into this context's truncation."""
        if isinstance(value, TruncatedSeries):
            if value.order < self.order:
                raise PreconditionError(
                    f"Series of order {value.order} cannot be used at order "
                    f"{self.order}."
                )
            return self._finish(value._coeffs)
        poly = LaurentPoly._coerce(value)
        if poly is None:
            raise TypeError(f"Cannot use {value!r} as a truncated series.")
        return self._finish([{0: poly}])

    def zero(self) -> TruncatedSeries:
        """Return the zero series."""
        return TruncatedSeries(self.order)

    def one(self) -> TruncatedSeries:
        """Return the constant series 1."""
        return self._finish([{0: LaurentPoly.one()}])

    def monomial(
        self, coeff: CoeffLike = 1, a_pow: int = 0, t_pow: int = 0
    ) -> TruncatedSeries:
        """Return ``coeff * a^a_pow * t^t_pow``, zero past the order."""
        if t_pow > self.order:
            return self.zero()
        coeffs: List[ADegreeMap] = [{} for _ in range(t_pow + 1)]
        coeffs[t_pow] = {a_pow: LaurentPoly._coerce(coeff)}  # type: ignore[dict-item]
        return self._finish(coeffs)

    def from_terms(
        self, terms: Mapping[Tuple[int, int], CoeffLike]
    ) -> TruncatedSeries:
        """Build a series from ``{(t_pow, a_pow): coefficient}``."""
        coeffs: List[ADegreeMap] = [{} for _ in range(self.order + 1)]
        for (t_pow, a_pow), value in terms.items():
            if t_pow < 0 or a_pow < 0:
                raise PreconditionError("Series exponents must be nonnegative.")
            if t_pow > self.order:
                continue
            poly = LaurentPoly._coerce(value)
            if poly is None:
                raise TypeError(f"Cannot use {value!r} as a series coefficient.")
            coeffs[t_pow] = _add_maps(coeffs[t_pow], {a_pow: poly})
        return self._finish(coeffs)

    def add(self, x: Any, y: Any) -> TruncatedSeries:
        """Return ``x + y``."""
        return self.coerce(x) + self.coerce(y)

    def sub(self, x: Any, y: Any) -> TruncatedSeries:
        """Return ``x - y``."""
        return self.coerce(x) - self.coerce(y)

    def mul(self, x: Any, y: Any) -> TruncatedSeries:
        """Return ``x * y`` truncated in t and in a."""
        return _multiply(self.coerce(x), self.coerce(y), self.order, self.max_a_degree)

    def scale(
        self, x: Any, coeff: CoeffLike = 1, a_pow: int = 0, t_pow: int = 0
    ) -> TruncatedSeries:
        """Multiply by the monomial ``coeff * a^a_pow * t^t_pow``."""
        series = self.coerce(x)
        poly = LaurentPoly._coerce(coeff)
        if poly is None:
            raise TypeError(f"Cannot scale by {coeff!r}.")
        coeffs: List[ADegreeMap] = [{} for _ in range(self.order + 1)]
        for m in range(self.order + 1 - t_pow):
            coeffs[m + t_pow] = _scale_map(series._coeffs[m], poly, a_pow)
        return self._finish(coeffs)

    def divide_linear(
        self, x: Any, c: Union[CoeffLike, Mapping[int, CoeffLike]]
    ) -> TruncatedSeries:
        """Return ``x / (1 - c t)`` where `c` is free of t.

        `c` may be a q-polynomial or an ``{a_pow: coefficient}`` map. The result
        follows ``r_m = x_m + c r_(m-1)`` and needs no inversion.
        """
        series = self.coerce(x)
        if isinstance(c, Mapping):
            c_map = {int(a): LaurentPoly._coerce(v) for a, v in c.items()}
        else:
            c_map = {0: LaurentPoly._coerce(c)}
        c_map = {a: v for a, v in c_map.items() if v is not None and not v.is_zero()}
        coeffs: List[ADegreeMap] = []
        previous: ADegreeMap = {}
        for m in range(self.order + 1):
            current = _add_maps(
                series._coeffs[m], _mul_maps(c_map, previous, self.max_a_degree)
            )
            coeffs.append(current)
            previous = current
        return self._finish(coeffs)

    def reciprocal(self, x: Any) -> TruncatedSeries:
        """Return ``1 / x`` for a series whose constant term is a unit.

        Raises
        ------
        NotInvertibleError
            If the constant term is not ``+q^e`` or ``-q^e`` free of a.
        """
        series = self.coerce(x)
        constant = series._coeffs[0]
        head = constant.get(0)
        if len(constant) != 1 or head is None or not head.is_unit():
            raise NotInvertibleError(
                "Only series with a unit monomial constant term can be inverted."
            )
        inverse_head = LaurentPoly.monomial(-head.min_exp, head.coeffs[0])
        out: List[ADegreeMap] = [{0: inverse_head}]
        for m in range(1, self.order + 1):
            acc: ADegreeMap = {}
            for i in range(1, m + 1):
                if series._coeffs[i]:
                    acc = _add_maps(
                        acc,
                        _mul_maps(series._coeffs[i], out[m - i], self.max_a_degree),
                    )
            out.append(_scale_map(acc, -inverse_head))
        return self._finish(out)

    def coefficient(self, x: Any, t_pow: int, a_pow: int = 0) -> LaurentPoly:
        """Return the q-coefficient of ``a^a_pow t^t_pow`` in `x`."""
        return self.coerce(x).coefficient(t_pow, a_pow)


def series_ops(order: int, max_a_degree: Optional[int] = None) -> SeriesContext:
    """Return the arithmetic context for series truncated at `order`.

    Parameters
    ----------
    order : int
        Highest retained power of t, at most the configured ``series_limit``.
    max_a_degree : int or None, default=None
        Highest retained power of a.

    Returns
    -------
    ops : SeriesContext
        Context whose results are all truncated.

    Raises
    ------
    PreconditionError
        If `order` is negative.
    CapacityError
        If `order` exceeds ``series_limit``.

    Examples
    --------
    >>> from setcross.qpoly import LaurentPoly, series_ops
    >>> ops = series_ops(3)
    >>> str(ops.reciprocal(ops.from_terms({(0, 0): 1, (1, 0): -1})))
    '1 + t + t^2 + t^3'
    >>> x = ops.from_terms({(0, 0): 1, (1, 1): 1})
    >>> y = ops.from_terms({(0, 0): 1, (1, 0): LaurentPoly.monomial(1)})
    >>> str(ops.mul(x, y))
    '1 + (q) t + a t + (q) a t^2'
    """
    order = check_nonnegative_int(order, "order")
    check_capacity(order, "series_limit", "series order")
    logger.debug("Series context at order %d, max a-degree %s", order, max_a_degree)
    return SeriesContext(order=order, max_a_degree=max_a_degree)
