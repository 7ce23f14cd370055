# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Exact Laurent polynomials in q with integer coefficients."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple, Union

from setcross.exceptions import DivisibilityError

__all__: List[str] = ["LaurentPoly", "exact_div", "poly_gcd"]
__author__: List[str] = ["RNKuhns"]

IntLike = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Immutable Laurent polynomial ``sum_e c_e q^e`` with integer coefficients.

    The coefficients are stored densely from the lowest exponent upward and are
    trimmed on construction, so the zero polynomial and every other value has
    exactly one representation.

    Parameters
    ----------
    coeffs : iterable of int, default=()
        Coefficients of ``q**min_exp``, ``q**(min_exp + 1)``, ...
    min_exp : int, default=0
        Exponent of the first coefficient.

    Examples
    --------
    >>> from setcross.qpoly import LaurentPoly
    >>> p = LaurentPoly([1, 1])
    >>> str(p * p)
    '1 + 2q + q^2'
    >>> str(LaurentPoly([3, 0, -1], min_exp=-2))
    '3q^-2 - 1'
    >>> (p * p).evaluate(1)
    4
    """

    __slots__ = ("_min_exp", "_coeffs")

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        values = [int(c) for c in coeffs]
        lo, hi = 0, len(values)
        while lo < hi and values[lo] == 0:
            lo += 1
        while hi > lo and values[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self._min_exp = 0
            self._coeffs: Tuple[int, ...] = ()
        else:
            self._min_exp = int(min_exp) + lo
            self._coeffs = tuple(values[lo:hi])

    @classmethod
    def zero(cls) -> LaurentPoly:
        """Return the zero polynomial."""
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        """Return the constant 1."""
        return cls((1,))

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        """Return the constant polynomial `value`."""
        return cls((value,))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        """Return ``coeff * q**exp``."""
        return cls((coeff,), min_exp=exp)

    @classmethod
    def from_dict(cls, terms: Dict[int, int]) -> LaurentPoly:
        """Build a polynomial from an ``{exponent: coefficient}`` mapping."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], min_exp=lo)

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> LaurentPoly:
        """Inverse of :meth:`to_json`."""
        return cls([int(c) for c in data["coeffs"]], min_exp=int(data["minExp"]))

    @property
    def min_exp(self) -> int:
        """Lowest exponent with a nonzero coefficient (0 for the zero polynomial)."""
        return self._min_exp

    @property
    def coeffs(self) -> Tuple[int, ...]:
        """Coefficients from :attr:`min_exp` upward."""
        return self._coeffs

    @property
    def degree(self) -> Optional[int]:
        """Highest exponent, or None for the zero polynomial."""
        if not self._coeffs:
            return None
        return self._min_exp + len(self._coeffs) - 1

    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self._coeffs

    def is_polynomial(self) -> bool:
        """Whether no negative exponent occurs."""
        return self._min_exp >= 0

    def is_unit(self) -> bool:
        """Whether this is ``+q**e`` or ``-q**e``, a unit of the Laurent ring."""
        return len(self._coeffs) == 1 and abs(self._coeffs[0]) == 1

    def coefficient(self, exp: int) -> int:
        """Return the coefficient of ``q**exp``."""
        index = exp - self._min_exp
        if 0 <= index < len(self._coeffs):
            return self._coeffs[index]
        return 0

    def terms(self) -> Iterator[Tuple[int, int]]:
        """Yield ``(exponent, coefficient)`` pairs with nonzero coefficient."""
        for offset, c in enumerate(self._coeffs):
            if c:
                yield self._min_exp + offset, c

    def dense_coeffs(self) -> List[int]:
        """Coefficients of ``q**0, q**1, ...`` up to the degree.

        Raises
        ------
        ValueError
            If a negative exponent occurs.
        """
        if not self.is_polynomial():
            raise ValueError(f"{self} has negative exponents.")
        if not self._coeffs:
            return []
        return [0] * self._min_exp + list(self._coeffs)

    def content(self) -> int:
        """Greatest common divisor of the coefficients (0 for zero)."""
        g = 0
        for c in self._coeffs:
            g = math.gcd(g, c)
        return g

    def shift(self, exp: int) -> LaurentPoly:
        """Multiply by ``q**exp``."""
        if not self._coeffs:
            return self
        return LaurentPoly(self._coeffs, min_exp=self._min_exp + exp)

    def evaluate(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        """Evaluate at ``q = x`` exactly."""
        if not self._coeffs:
            return 0
        if self._min_exp >= 0 and isinstance(x, int):
            total = 0
            for c in reversed(self._coeffs):
                total = total * x + c
            return total * x**self._min_exp
        x = Fraction(x)
        total = Fraction(0)
        for c in reversed(self._coeffs):
            total = total * x + c
        result = total * x**self._min_exp
        return int(result) if result.denominator == 1 else result

    def derivative(self) -> LaurentPoly:
        """Derivative with respect to q."""
        return LaurentPoly.from_dict({e - 1: e * c for e, c in self.terms()})

    def to_json(self) -> Dict[str, Any]:
        """JSON form with decimal-string coefficients."""
        return {"minExp": self._min_exp, "coeffs": [str(c) for c in self._coeffs]}

    @staticmethod
    def _coerce(other: Any) -> Optional[LaurentPoly]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly((other,))
        return None

    def __add__(self, other: Any) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not rhs._coeffs:
            return self
        if not self._coeffs:
            return rhs
        lo = min(self._min_exp, rhs._min_exp)
        hi = max(self.degree, rhs.degree)  # type: ignore[type-var]
        values = [0] * (hi - lo + 1)
        for poly in (self, rhs):
            offset = poly._min_exp - lo
            for i, c in enumerate(poly._coeffs):
                values[offset + i] += c
        return LaurentPoly(values, min_exp=lo)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly([-c for c in self._coeffs], min_exp=self._min_exp)

    def __sub__(self, other: Any) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> LaurentPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: Any) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not self._coeffs or not rhs._coeffs:
            return LaurentPoly()
        if len(rhs._coeffs) == 1:
            c = rhs._coeffs[0]
            return LaurentPoly(
                [a * c for a in self._coeffs], min_exp=self._min_exp + rhs._min_exp
            )
        values = [0] * (len(self._coeffs) + len(rhs._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(rhs._coeffs):
                    values[i + j] += a * b
        return LaurentPoly(values, min_exp=self._min_exp + rhs._min_exp)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Only nonnegative integer powers are supported.")
        result = LaurentPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._min_exp == rhs._min_exp and self._coeffs == rhs._coeffs

    def __hash__(self) -> int:
        if len(self._coeffs) == 1 and self._min_exp == 0:
            return hash(self._coeffs[0])
        if not self._coeffs:
            return hash(0)
        return hash((self._min_exp, self._coeffs))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces: List[str] = []
        for exp, c in self.terms():
            if exp == 0:
                body = str(abs(c))
            else:
                power = "q" if exp == 1 else f"q^{exp}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({list(self._coeffs)}, min_exp={self._min_exp})"


def _trim(values: List[int]) -> List[int]:
    while values and values[-1] == 0:
        values.pop()
    return values


def _divmod_exact_lead(num: List[int], den: List[int]) -> Tuple[List[int], List[int]]:
    """Long division of ascending coefficient lists over the integers.

    Raises DivisibilityError when a leading coefficient does not divide.
    """
    rem = list(num)
    deg_den = len(den) - 1
    lead = den[-1]
    quotient = [0] * max(len(num) - deg_den, 0)
    while len(rem) - 1 >= deg_den and rem:
        shift = len(rem) - 1 - deg_den
        top = rem[-1]
        if top % lead:
            raise DivisibilityError("Leading coefficient does not divide exactly.")
        factor = top // lead
        quotient[shift] = factor
        for i, c in enumerate(den):
            rem[shift + i] -= factor * c
        _trim(rem)
    return quotient, rem


def exact_div(a: IntLike, b: IntLike) -> LaurentPoly:
    """Divide Laurent polynomials when the quotient is exact.

    Parameters
    ----------
    a : LaurentPoly or int
        Dividend.
    b : LaurentPoly or int
        Nonzero divisor.

    Returns
    -------
    quotient : LaurentPoly
        The unique Laurent polynomial ``c`` with ``a = b * c``.

    Raises
    ------
    ZeroDivisionError
        If `b` is zero.
    DivisibilityError
        If the division leaves a remainder.

    Examples
    --------
    >>> from setcross.qpoly import LaurentPoly, exact_div, q_factorial, q_integer
    >>> str(exact_div(LaurentPoly([1, 0, -1]), LaurentPoly([1, -1])))
    '1 + q'
    >>> exact_div(q_factorial(3), q_integer(2)) == q_integer(3)
    True
    """
    num = LaurentPoly._coerce(a)
    den = LaurentPoly._coerce(b)
    if num is None or den is None:
        raise TypeError("exact_div expects LaurentPoly or int operands.")
    if den.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial.")
    if num.is_zero():
        return LaurentPoly()
    quotient, rem = _divmod_exact_lead(list(num.coeffs), list(den.coeffs))
    if rem:
        raise DivisibilityError(f"{num} is not divisible by {den}.")
    return LaurentPoly(quotient, min_exp=num.min_exp - den.min_exp)


def _primitive(values: List[int]) -> List[int]:
    g = 0
    for c in values:
        g = math.gcd(g, c)
    if g == 0:
        return []
    values = [c // g for c in values]
    if values[-1] < 0:
        values = [-c for c in values]
    return values


def _pseudo_remainder(num: List[int], den: List[int]) -> List[int]:
    rem = list(num)
    deg_den = len(den) - 1
    lead = den[-1]
    while rem and len(rem) - 1 >= deg_den:
        shift = len(rem) - 1 - deg_den
        top = rem[-1]
        rem = [lead * c for c in rem]
        for i, c in enumerate(den):
            rem[shift + i] -= top * c
        _trim(rem)
    return rem


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Primitive gcd of two Laurent polynomials up to units.

    Monomial factors are units of the Laurent ring and are dropped; the gcd is
    computed with primitive pseudo-remainder sequences over the integers.

    Returns
    -------
    gcd : LaurentPoly
        Primitive polynomial with nonzero constant term and positive leading
        coefficient; 1 when either argument is zero-free of common factors.
    """
    if a.is_zero() and b.is_zero():
        return LaurentPoly()
    if a.is_zero():
        return LaurentPoly(_primitive(list(b.coeffs)))
    if b.is_zero():
        return LaurentPoly(_primitive(list(a.coeffs)))
    x = _primitive(list(a.coeffs))
    y = _primitive(list(b.coeffs))
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _primitive(_pseudo_remainder(x, y))
    return LaurentPoly(x)
