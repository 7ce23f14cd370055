# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Integer partitions used as block-size vectors."""
from __future__ import annotations

from collections import Counter
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from setcross.exceptions import PartitionValidationError
from setcross.utils._check import check_nonnegative_int

__all__: List[str] = ["IntegerPartition", "integer_partitions"]
__author__: List[str] = ["RNKuhns"]


class IntegerPartition(Sequence[int]):
    """Nonincreasing sequence of positive integers.

    Parameters
    ----------
    parts : sequence of int
        The parts. They are validated, not sorted, so ``(1, 2)`` is rejected.

    Examples
    --------
    >>> from setcross.partitions import IntegerPartition
    >>> lam = IntegerPartition((3, 2, 2, 1))
    >>> lam.n, lam.k, str(lam)
    (8, 4, '(3,2,2,1)')
    >>> lam.multiplicities()
    {3: 1, 2: 2, 1: 1}
    >>> lam.conjugate()
    IntegerPartition((4, 3, 1))
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Sequence[int] = ()):
        values = tuple(int(p) for p in parts)
        if any(p < 1 for p in values):
            raise PartitionValidationError(f"Parts must be positive, got {values}.")
        if any(a < b for a, b in zip(values, values[1:])):
            raise PartitionValidationError(
                f"Parts must be nonincreasing, got {values}."
            )
        self._parts: Tuple[int, ...] = values

    @classmethod
    def from_multiplicities(cls, multiplicities: Dict[int, int]) -> IntegerPartition:
        """Build a partition from a ``{part: multiplicity}`` mapping."""
        parts: List[int] = []
        for part in sorted(multiplicities, reverse=True):
            count = check_nonnegative_int(multiplicities[part], "multiplicity")
            parts.extend([part] * count)
        return cls(parts)

    @classmethod
    def from_unsorted(cls, sizes: Sequence[int]) -> IntegerPartition:
        """Sort an arbitrary multiset of positive sizes into a partition."""
        return cls(sorted(sizes, reverse=True))

    @property
    def parts(self) -> Tuple[int, ...]:
        """The parts, largest first."""
        return self._parts

    @property
    def n(self) -> int:
        """Sum of the parts."""
        return sum(self._parts)

    @property
    def k(self) -> int:
        """Number of parts."""
        return len(self._parts)

    def multiplicities(self) -> Dict[int, int]:
        """Return ``{part: multiplicity}`` with parts in decreasing order."""
        return dict(Counter(self._parts))

    def conjugate(self) -> IntegerPartition:
        """Return the partition whose Ferrers diagram is the transpose."""
        if not self._parts:
            return IntegerPartition()
        return IntegerPartition(
            [sum(1 for p in self._parts if p > row) for row in range(self._parts[0])]
        )

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, index):  # type: ignore[override]
        return self._parts[index]

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, IntegerPartition):
            return self._parts == other._parts
        if isinstance(other, tuple):
            return self._parts == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __lt__(self, other: IntegerPartition) -> bool:
        return self._parts < other._parts

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self._parts) + ")"

    def __repr__(self) -> str:
        return f"IntegerPartition({self._parts})"


def integer_partitions(n: int, k: Optional[int] = None) -> Iterator[IntegerPartition]:
    """Enumerate the partitions of `n`, optionally with exactly `k` parts.

    Partitions are produced in reverse lexicographic order, so ``(n,)`` comes
    first and ``(1, ..., 1)`` last.

    Parameters
    ----------
    n : int
        Nonnegative integer to partition.
    k : int, default=None
        Required number of parts; None allows any number.

    Yields
    ------
    partition : IntegerPartition

    Examples
    --------
    >>> from setcross.partitions import integer_partitions
    >>> [str(p) for p in integer_partitions(5, 2)]
    ['(4,1)', '(3,2)']
    >>> sum(1 for _ in integer_partitions(10))
    42
    """
    n = check_nonnegative_int(n, "n")
    if k is not None:
        k = check_nonnegative_int(k, "k")

    def extend(remaining: int, largest: int, slots: Optional[int]):
        if remaining == 0:
            if slots is None or slots == 0:
                yield ()
            return
        if slots == 0:
            return
        high, low = min(largest, remaining), 1
        if slots is not None:
            # leave at least one unit per open slot, and no part above head
            high = min(high, remaining - slots + 1)
            low = -(-remaining // slots)
        for head in range(high, low - 1, -1):
            rest = None if slots is None else slots - 1
            for tail in extend(remaining - head, head, rest):
                yield (head,) + tail

    for parts in extend(n, n, k):
        yield IntegerPartition(parts)
