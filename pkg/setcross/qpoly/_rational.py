# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Normalized quotients of Laurent polynomials."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, List, Optional, Union

from setcross.qpoly._laurent import LaurentPoly, exact_div, poly_gcd

__all__: List[str] = ["RationalFn"]
__author__: List[str] = ["RNKuhns"]


class RationalFn:
    """Quotient ``num / den`` of Laurent polynomials kept in canonical form.

    On construction the common polynomial factor is cancelled, monomial factors
    of the denominator are moved to the numerator, the common integer content
    is removed and the denominator gets a positive leading coefficient. Equal
    fractions therefore have identical representations.

    Parameters
    ----------
    num : LaurentPoly or int
        Numerator.
    den : LaurentPoly or int, default=1
        Nonzero denominator.

    Examples
    --------
    >>> from setcross.qpoly import LaurentPoly, RationalFn, q_factorial, q_integer
    >>> f = RationalFn(q_integer(2) ** 3, q_factorial(2))
    >>> f.is_polynomial(), str(f.to_laurent())
    (True, '1 + 2q + q^2')
    >>> RationalFn(LaurentPoly([2, 2]), LaurentPoly([0, 4, 4])) == RationalFn(
    ...     LaurentPoly.monomial(-1), 2)
    True
    """

    __slots__ = ("_num", "_den")

    def __init__(
        self,
        num: Union[LaurentPoly, int],
        den: Union[LaurentPoly, int] = 1,
        _normalized: bool = False,
    ):
        num_poly = LaurentPoly._coerce(num)
        den_poly = LaurentPoly._coerce(den)
        if num_poly is None or den_poly is None:
            raise TypeError("RationalFn expects LaurentPoly or int operands.")
        if den_poly.is_zero():
            raise ZeroDivisionError("RationalFn with zero denominator.")
        if _normalized:
            self._num, self._den = num_poly, den_poly
        else:
            self._num, self._den = self._normalize(num_poly, den_poly)

    @staticmethod
    def _normalize(num: LaurentPoly, den: LaurentPoly):
        if num.is_zero():
            return LaurentPoly(), LaurentPoly.one()
        # monomial factors of the denominator are units
        shift = den.min_exp
        num = num.shift(-shift)
        den = den.shift(-shift)
        if len(den.coeffs) > 1 and len(num.coeffs) > 1:
            common = poly_gcd(num, den)
            if common.degree:
                num = exact_div(num, common)
                den = exact_div(den, common)
        g = math.gcd(num.content(), den.content())
        if den.coeffs[-1] < 0:
            g = -g
        if g != 1:
            num = LaurentPoly([c // g for c in num.coeffs], min_exp=num.min_exp)
            den = LaurentPoly([c // g for c in den.coeffs], min_exp=den.min_exp)
        return num, den

    @property
    def num(self) -> LaurentPoly:
        """Normalized numerator."""
        return self._num

    @property
    def den(self) -> LaurentPoly:
        """Normalized denominator (constant term nonzero, leading term positive)."""
        return self._den

    def is_polynomial(self) -> bool:
        """Whether the denominator is 1, that is the value is a Laurent polynomial."""
        return self._den == 1

    def to_laurent(self) -> LaurentPoly:
        """Return the value as a Laurent polynomial.

        Raises
        ------
        ValueError
            If the denominator is not 1.
        """
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a Laurent polynomial.")
        return self._num

    def evaluate(self, x: Union[int, Fraction]) -> Fraction:
        """Evaluate at ``q = x`` exactly."""
        return Fraction(self._num.evaluate(x)) / Fraction(self._den.evaluate(x))

    @staticmethod
    def _coerce(other: Any) -> Optional[RationalFn]:
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, (LaurentPoly, int)):
            return RationalFn(other, _normalized=True)
        return None

    def __add__(self, other: Any) -> RationalFn:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self._den == rhs._den:
            return RationalFn(self._num + rhs._num, self._den)
        return RationalFn(
            self._num * rhs._den + rhs._num * self._den, self._den * rhs._den
        )

    __radd__ = __add__

    def __neg__(self) -> RationalFn:
        return RationalFn(-self._num, self._den, _normalized=True)

    def __sub__(self, other: Any) -> RationalFn:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> RationalFn:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: Any) -> RationalFn:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return RationalFn(self._num * rhs._num, self._den * rhs._den)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> RationalFn:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs._num.is_zero():
            raise ZeroDivisionError("Division by the zero rational function.")
        return RationalFn(self._num * rhs._den, self._den * rhs._num)

    def __eq__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._num == rhs._num and self._den == rhs._den

    def __hash__(self) -> int:
        if self.is_polynomial():
            return hash(self._num)
        return hash((self._num, self._den))

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self._num)
        return f"({self._num}) / ({self._den})"

    def __repr__(self) -> str:
        return f"RationalFn({self._num!r}, {self._den!r})"
