# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Value types for distribution polynomials and exact probability mass functions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from setcross.exactnum import stirling2
from setcross.exceptions import FormulaVerificationError, PreconditionError
from setcross.qpoly import LaurentPoly
from setcross.utils._serialize import rational_to_json

__all__: List[str] = ["DistPoly", "Pmf"]
__author__: List[str] = ["RNKuhns"]


@dataclass(frozen=True)
class DistPoly:
    """Crossing polynomial ``T_{n,k}(q) = sum_pi q^cr(pi)`` over k-block partitions.

    Parameters
    ----------
    n : int
        Ground-set size.
    k : int
        Number of blocks.
    poly : LaurentPoly
        The polynomial; the coefficient of ``q^i`` counts partitions with ``i``
        crossings.
    method : str
        Which computation produced it ("ksz", "jr", "series" or "brute").
    stat : str, default="linear"
        Which crossing statistic is counted.

    Raises
    ------
    FormulaVerificationError
        If `poly` has negative exponents or coefficients, or if its value at
        ``q = 1`` is not ``S(n, k)``.

    Examples
    --------
    >>> from setcross.distribution import DistPoly
    >>> from setcross.qpoly import LaurentPoly
    >>> t = DistPoly(4, 2, LaurentPoly([6, 1]), "brute")
    >>> t.coeffs, t.total, t.degree
    ([6, 1], 7, 1)
    >>> t.to_json()["coeffs"]
    ['6', '1']
    """

    n: int
    k: int
    poly: LaurentPoly
    method: str
    stat: str = "linear"

    def __post_init__(self):
        label = f"T_({self.n},{self.k}) from {self.method}"
        if not self.poly.is_polynomial():
            raise FormulaVerificationError(f"{label} has negative exponents.")
        if any(c < 0 for c in self.poly.coeffs):
            raise FormulaVerificationError(f"{label} has a negative coefficient.")
        expected = stirling2(self.n, self.k)
        if self.poly.evaluate(1) != expected:
            msg = f"{label} sums to {self.poly.evaluate(1)}, "
            msg += f"but S({self.n},{self.k}) = {expected}."
            raise FormulaVerificationError(msg)

    @property
    def coeffs(self) -> List[int]:
        """Coefficient of ``q^i`` at index ``i``."""
        return self.poly.dense_coeffs()

    @property
    def total(self) -> int:
        """Value at ``q = 1``, the Stirling number ``S(n, k)``."""
        return self.poly.evaluate(1)

    @property
    def degree(self) -> int:
        """Largest crossing number that occurs; -1 when there is no partition."""
        degree = self.poly.degree
        return -1 if degree is None else degree

    def to_pmf(self) -> Pmf:
        """Normalize the coefficients into a probability mass function."""
        return Pmf.from_counts(dict(self.poly.terms()))

    def to_json(self) -> Dict[str, Any]:
        """JSON form with decimal-string coefficients."""
        return {
            "n": self.n,
            "k": self.k,
            "stat": self.stat,
            "method": self.method,
            "coeffs": [str(c) for c in self.coeffs],
        }


@dataclass(frozen=True)
class Pmf:
    """Exact probability mass function on a finite set of integers.

    Parameters
    ----------
    support : tuple of int
        Increasing values with positive probability.
    probs : tuple of Fraction
        Matching probabilities; they are positive and sum to exactly 1.

    Examples
    --------
    >>> from setcross.distribution import Pmf
    >>> pmf = Pmf.from_counts({0: 6, 1: 1})
    >>> pmf.as_dict()
    {0: Fraction(6, 7), 1: Fraction(1, 7)}
    >>> pmf.mean(), pmf.variance()
    (Fraction(1, 7), Fraction(6, 49))
    """

    support: Tuple[int, ...]
    probs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.support) != len(self.probs):
            raise PreconditionError("support and probs must have the same length.")
        if list(self.support) != sorted(set(self.support)):
            raise PreconditionError("support must be strictly increasing.")
        if any(p <= 0 for p in self.probs):
            raise PreconditionError("Probabilities must be positive.")
        if sum(self.probs, Fraction(0)) != 1:
            raise PreconditionError("Probabilities must sum to exactly 1.")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> Pmf:
        """Normalize nonnegative integer counts into a distribution."""
        total = sum(counts.values())
        if total <= 0 or any(c < 0 for c in counts.values()):
            raise PreconditionError("Counts must be nonnegative with positive total.")
        support = tuple(sorted(x for x, c in counts.items() if c))
        return cls(support, tuple(Fraction(counts[x], total) for x in support))

    @classmethod
    def point_mass(cls, value: int = 0) -> Pmf:
        """Distribution concentrated on `value`."""
        return cls((value,), (Fraction(1),))

    def prob(self, value: int) -> Fraction:
        """Probability of `value` (0 off the support)."""
        return self.as_dict().get(value, Fraction(0))

    def as_dict(self) -> Dict[int, Fraction]:
        """Return ``{value: probability}``."""
        return dict(zip(self.support, self.probs))

    def moment(self, r: int, center: Optional[Fraction] = None) -> Fraction:
        """Raw moment ``E[X^r]``, or central moment around `center`."""
        shift = Fraction(0) if center is None else Fraction(center)
        return sum(
            (p * (x - shift) ** r for x, p in zip(self.support, self.probs)),
            Fraction(0),
        )

    def mean(self) -> Fraction:
        """Expected value."""
        return self.moment(1)

    def variance(self) -> Fraction:
        """Variance."""
        return self.moment(2, center=self.mean())

    def cdf(self, values: Sequence[float]) -> List[Fraction]:
        """Return ``P(X <= x)`` for every ``x`` in `values`."""
        pairs = list(zip(self.support, self.probs))
        return [sum((p for v, p in pairs if v <= x), Fraction(0)) for x in values]

    def to_json(self) -> Dict[str, Any]:
        """JSON form with probabilities as ``{"num", "den"}`` decimal strings."""
        return {
            "support": list(self.support),
            "probs": [rational_to_json(p) for p in self.probs],
        }
