# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Canonical set partitions of [n] and their text form."""
from __future__ import annotations

from collections.abc import Iterable as IterableABC
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from setcross.exceptions import PartitionValidationError
from setcross.partitions._integer_partition import IntegerPartition

__all__: List[str] = [
    "SetPartition",
    "as_set_partition",
    "block_sizes",
    "format_partition",
    "parse_partition",
    "standardize",
]
__author__: List[str] = ["RNKuhns"]

PartitionLike = Union["SetPartition", str, Sequence[int], Sequence[Sequence[int]]]


def _check_rgs(rgs: Tuple[int, ...]) -> None:
    top = -1
    for position, label in enumerate(rgs):
        if label < 0 or label > top + 1:
            raise PartitionValidationError(
                f"{list(rgs)} is not a restricted growth string: entry "
                f"{position + 1} is {label} after maximum {top}."
            )
        top = max(top, label)


class SetPartition:
    """A partition of ``[n] = {1, ..., n}`` in canonical form.

    The partition is stored as its restricted growth string (RGS): entry ``i``
    is the 0-based index of the block holding element ``i + 1``, with blocks
    numbered in order of their minima. The block list is derived from it.

    Parameters
    ----------
    rgs : sequence of int
        Canonical restricted growth string; ``rgs[0] = 0`` and each entry is at
        most one more than the maximum before it.

    Raises
    ------
    PartitionValidationError
        If `rgs` is not canonical.

    See Also
    --------
    parse_partition : Build a partition from its ``"1 3/2 4"`` text form.

    Examples
    --------
    >>> from setcross.partitions import SetPartition
    >>> p = SetPartition.from_blocks([[2, 4], [3, 1]])
    >>> p.rgs, p.blocks, p.k
    ((0, 1, 0, 1), ((1, 3), (2, 4)), 2)
    >>> str(p)
    '1 3/2 4'
    >>> SetPartition((0, 1, 0, 1)) == p
    True
    """

    __slots__ = ("_rgs", "_blocks")

    def __init__(self, rgs: Sequence[int] = (), _validated: bool = False):
        values = tuple(int(x) for x in rgs)
        if not _validated:
            _check_rgs(values)
        blocks: List[List[int]] = []
        for element, label in enumerate(values, start=1):
            if label == len(blocks):
                blocks.append([element])
            else:
                blocks[label].append(element)
        self._rgs: Tuple[int, ...] = values
        self._blocks: Tuple[Tuple[int, ...], ...] = tuple(tuple(b) for b in blocks)

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> SetPartition:
        """Build a partition from a canonical restricted growth string."""
        return cls(rgs)

    @classmethod
    def from_blocks(
        cls, blocks: Iterable[Iterable[int]], n: Optional[int] = None
    ) -> SetPartition:
        """Build a partition of ``[n]`` from blocks given in any order.

        Parameters
        ----------
        blocks : iterable of iterable of int
            Nonempty, pairwise disjoint blocks of 1-based elements.
        n : int, default=None
            Ground-set size; defaults to the total number of elements.

        Raises
        ------
        PartitionValidationError
            If the blocks are empty, overlap or do not cover ``[n]``.
        """
        block_lists = [sorted(int(x) for x in block) for block in blocks]
        if any(not block for block in block_lists):
            raise PartitionValidationError("Blocks must be nonempty.")
        elements = [x for block in block_lists for x in block]
        size = len(elements) if n is None else int(n)
        if sorted(elements) != list(range(1, size + 1)):
            raise PartitionValidationError(
                f"Blocks {block_lists} do not partition [1..{size}] exactly."
            )
        block_lists.sort(key=lambda block: block[0])
        rgs = [0] * size
        for label, block in enumerate(block_lists):
            for x in block:
                rgs[x - 1] = label
        return cls(rgs, _validated=True)

    @property
    def n(self) -> int:
        """Size of the ground set."""
        return len(self._rgs)

    @property
    def k(self) -> int:
        """Number of blocks."""
        return len(self._blocks)

    @property
    def rgs(self) -> Tuple[int, ...]:
        """Restricted growth string with 0-based block labels."""
        return self._rgs

    @property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted blocks ordered by their minimum element."""
        return self._blocks

    def to_json(self) -> Dict[str, Any]:
        """JSON form ``{"n": n, "blocks": [[...], ...]}``."""
        return {"n": self.n, "blocks": [list(block) for block in self._blocks]}

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self._rgs == other._rgs

    def __hash__(self) -> int:
        return hash(self._rgs)

    def __lt__(self, other: SetPartition) -> bool:
        return (self.n, self._rgs) < (other.n, other._rgs)

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"SetPartition.from_blocks({[list(b) for b in self._blocks]})"


def format_partition(partition: SetPartition) -> str:
    """Render ``"B1/B2/.../Bk"`` with space separated elements.

    The empty partition renders as the empty string.
    """
    return "/".join(" ".join(str(x) for x in block) for block in partition.blocks)


def parse_partition(text: str) -> SetPartition:
    """Parse the ``"1 10/2 3 7 9/4"`` text form.

    Blocks may come in any order and elements in any order inside a block;
    the result is canonical, so parsing inverts :func:`format_partition`.

    Raises
    ------
    PartitionValidationError
        If the text has an empty block, a non-integer token or does not
        partition ``[n]``.

    Examples
    --------
    >>> from setcross.partitions import parse_partition
    >>> str(parse_partition("8 11/1 10/4/2 3 7 9/5 6 12"))
    '1 10/2 3 7 9/4/5 6 12/8 11'
    >>> parse_partition("").n
    0
    """
    text = text.strip()
    if not text:
        return SetPartition()
    blocks = []
    for chunk in text.split("/"):
        tokens = chunk.replace(",", " ").split()
        if not tokens:
            raise PartitionValidationError(f"Empty block in {text!r}.")
        try:
            blocks.append([int(token) for token in tokens])
        except ValueError as exc:
            raise PartitionValidationError(
                f"Non-integer element in {text!r}."
            ) from exc
    return SetPartition.from_blocks(blocks)


def as_set_partition(value: PartitionLike) -> SetPartition:
    """Coerce text, a restricted growth string or a block list to a partition.

    Examples
    --------
    >>> from setcross.partitions import as_set_partition
    >>> as_set_partition("1 3/2 4") == as_set_partition([0, 1, 0, 1])
    True
    >>> as_set_partition([[1, 3], [2, 4]]).rgs
    (0, 1, 0, 1)
    """
    if isinstance(value, SetPartition):
        return value
    if isinstance(value, str):
        return parse_partition(value)
    items = list(value)
    if all(isinstance(item, int) for item in items):
        return SetPartition(items)
    if all(isinstance(item, IterableABC) for item in items):
        return SetPartition.from_blocks(items)
    raise PartitionValidationError(f"Cannot interpret {value!r} as a set partition.")


def standardize(
    elements: Iterable[int], sub: Union[str, Iterable[Iterable[int]]]
) -> SetPartition:
    """Relabel a partition of a finite set of positive integers onto ``[m]``.

    The i-th smallest element of `elements` becomes ``i``; blocks are mapped
    element-wise, so the relabeling preserves order.

    Parameters
    ----------
    elements : iterable of int
        The labelled ground set.
    sub : str or iterable of iterable of int
        Blocks over `elements`, as a block list or in text form.

    Returns
    -------
    partition : SetPartition
        The standardized partition of ``[len(elements)]``.

    Raises
    ------
    PartitionValidationError
        If the blocks use a label outside `elements` or do not cover it
        exactly once.

    Examples
    --------
    >>> from setcross.partitions import standardize
    >>> str(standardize([2, 4, 5, 7, 8, 9, 10, 11], "2 9/4 10/5/7 11/8"))
    '1 6/2 7/3/4 8/5'
    >>> str(standardize({3, 7}, [[3], [7]]))
    '1/2'
    """
    ground = sorted(set(int(x) for x in elements))
    rank = {x: i for i, x in enumerate(ground, start=1)}
    if isinstance(sub, str):
        text = sub.strip()
        block_lists = (
            [chunk.replace(",", " ").split() for chunk in text.split("/")]
            if text
            else []
        )
        try:
            labelled = [[int(x) for x in block] for block in block_lists]
        except ValueError as exc:
            raise PartitionValidationError(f"Non-integer label in {sub!r}.") from exc
    else:
        labelled = [[int(x) for x in block] for block in sub]
    seen = [x for block in labelled for x in block]
    unknown = sorted(set(seen) - set(rank))
    if unknown:
        raise PartitionValidationError(
            f"Labels {unknown} are not in the element set {ground}."
        )
    if sorted(seen) != ground:
        raise PartitionValidationError(
            f"Blocks {labelled} do not cover {ground} exactly once."
        )
    return SetPartition.from_blocks([[rank[x] for x in block] for block in labelled])


def block_sizes(partition: PartitionLike) -> IntegerPartition:
    """Return the block-size vector as a nonincreasing integer partition.

    Examples
    --------
    >>> from setcross.partitions import block_sizes
    >>> str(block_sizes("1 7/2 3 8/4/5 6"))
    '(3,2,2,1)'
    >>> str(block_sizes("1 10/2 3 7 9/4/5 6 12/8 11"))
    '(4,3,2,2,1)'
    """
    partition = as_set_partition(partition)
    return IntegerPartition.from_unsorted([len(block) for block in partition.blocks])
