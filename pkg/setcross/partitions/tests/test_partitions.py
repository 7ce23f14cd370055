# -*- coding: utf-8 -*-
"""Test set partition representation, enumeration and standardization."""
import pytest

from setcross.config import config_context
from setcross.exactnum import bell, stirling2
from setcross.exceptions import CapacityError, PartitionValidationError
from setcross.partitions import (
    IntegerPartition,
    SetPartition,
    as_set_partition,
    block_sizes,
    enumerate_all,
    enumerate_k,
    integer_partitions,
    parse_partition,
    rgs_prefixes,
    standardize,
)

FIGURE_PARTITION = "1 10/2 3 7 9/4/5 6 12/8 11"
PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


@pytest.mark.parametrize("n", range(10))
def test_enumerate_all_count_is_bell_number(n):
    """Verify enumerate_all yields B_n partitions."""
    count = sum(1 for _ in enumerate_all(n))
    msg = f"`enumerate_all({n})` yields the wrong number of partitions.\n"
    msg += f"Expected {bell(n)}, but returned {count}."
    assert count == bell(n), msg


@pytest.mark.parametrize("n", range(1, 10))
def test_enumerate_k_counts_are_stirling_numbers(n):
    """Verify enumerate_k yields S(n, k) partitions that sum to B_n."""
    counts = [sum(1 for _ in enumerate_k(n, k)) for k in range(1, n + 1)]
    assert counts == [stirling2(n, k) for k in range(1, n + 1)]
    assert sum(counts) == sum(1 for _ in enumerate_all(n))


@pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (6, 1), (6, 6)])
def test_enumerate_k_yields_exactly_k_blocks(n, k):
    """Verify every emitted partition has k blocks."""
    assert all(p.k == k for p in enumerate_k(n, k))


def test_enumerate_k_edge_cases():
    """Verify empty streams and the empty partition."""
    assert list(enumerate_k(3, 4)) == []
    assert list(enumerate_k(3, 0)) == []
    assert [p.rgs for p in enumerate_k(0, 0)] == [()]
    assert [p.rgs for p in enumerate_all(0)] == [()]
    assert [str(p) for p in enumerate_k(5, 5)] == ["1/2/3/4/5"]


@pytest.mark.parametrize("n", [5, 7])
def test_enumeration_is_lexicographic_and_valid(n):
    """Verify RGS order and that each partition survives every round trip."""
    partitions = list(enumerate_all(n))
    rgs_list = [p.rgs for p in partitions]
    assert rgs_list == sorted(rgs_list)
    assert len(set(rgs_list)) == len(rgs_list)
    for p in partitions:
        assert SetPartition.from_rgs(p.rgs).rgs == p.rgs
        assert SetPartition.from_blocks(p.blocks) == p
        assert parse_partition(str(p)) == p
        assert sorted(x for block in p.blocks for x in block) == list(range(1, n + 1))
        minima = [block[0] for block in p.blocks]
        assert minima == sorted(minima)


@pytest.mark.parametrize("depth", [0, 1, 3, 7])
def test_prefix_split_reproduces_full_stream(depth):
    """Verify concatenated prefix streams equal the unsplit stream."""
    n = 7
    prefixes = rgs_prefixes(n, depth)
    split_all = [p for prefix in prefixes for p in enumerate_all(n, prefix=prefix)]
    assert split_all == list(enumerate_all(n))
    split_k = [p for prefix in prefixes for p in enumerate_k(n, 3, prefix=prefix)]
    assert split_k == list(enumerate_k(n, 3))


def test_enumeration_respects_capacity():
    """Verify enumeration above enumeration_limit raises CapacityError."""
    with config_context(enumeration_limit=5):
        with pytest.raises(CapacityError):
            enumerate_all(6)
        with pytest.raises(CapacityError):
            enumerate_k(6, 2)
        assert sum(1 for _ in enumerate_all(5)) == 52


@pytest.mark.parametrize("rgs", [(1, 0), (0, 2), (0, 1, 3), (0, -1)])
def test_invalid_rgs_is_rejected(rgs):
    """Verify non-canonical restricted growth strings raise."""
    with pytest.raises(PartitionValidationError):
        SetPartition(rgs)


@pytest.mark.parametrize("text", ["1 2/2 3", "1/3", "1//2", "1 x/2"])
def test_invalid_text_is_rejected(text):
    """Verify malformed text forms raise."""
    with pytest.raises(PartitionValidationError):
        parse_partition(text)


def test_text_form_round_trip():
    """Verify the parser and printer are inverse on canonical text."""
    p = parse_partition(FIGURE_PARTITION)
    assert str(p) == FIGURE_PARTITION
    assert p.n == 12 and p.k == 5
    assert as_set_partition(p.rgs) == as_set_partition(p.blocks) == p
    assert p.to_json() == {
        "n": 12,
        "blocks": [[1, 10], [2, 3, 7, 9], [4], [5, 6, 12], [8, 11]],
    }


def test_standardize_examples():
    """Verify order-preserving relabeling onto [m]."""
    elements = [2, 4, 5, 7, 8, 9, 10, 11]
    assert str(standardize(elements, "2 9/4 10/5/7 11/8")) == "1 6/2 7/3/4 8/5"
    assert str(standardize([3, 7], [[3], [7]])) == "1/2"
    assert standardize(range(1, 5), "1 3/2 4") == parse_partition("1 3/2 4")


@pytest.mark.parametrize(
    "elements,sub", [([2, 4], "2 5"), ([2, 4, 6], "2/4"), ([2, 4], "2 4/4")]
)
def test_standardize_rejects_bad_labels(elements, sub):
    """Verify labels outside the element set or missing labels raise."""
    with pytest.raises(PartitionValidationError):
        standardize(elements, sub)


@pytest.mark.parametrize(
    "partition,expected",
    [
        ("1 7/2 3 8/4/5 6", (3, 2, 2, 1)),
        ("1/2/3/4/5", (1, 1, 1, 1, 1)),
        (FIGURE_PARTITION, (4, 3, 2, 2, 1)),
    ],
)
def test_block_sizes(partition, expected):
    """Verify block-size vectors."""
    sizes = block_sizes(partition)
    assert sizes == IntegerPartition(expected)
    assert sizes.n == parse_partition(partition).n


@pytest.mark.parametrize("n", range(13))
def test_integer_partition_counts(n):
    """Verify the number of integer partitions and the k-split."""
    partitions = list(integer_partitions(n))
    assert len(partitions) == PARTITION_NUMBERS[n]
    assert len(set(partitions)) == len(partitions)
    by_k = sum(len(list(integer_partitions(n, k))) for k in range(n + 1))
    assert by_k == PARTITION_NUMBERS[n]
    assert all(p.n == n for p in partitions)


def test_integer_partition_views():
    """Verify multiplicities, conjugation and validation."""
    lam = IntegerPartition.from_multiplicities({2: 2, 3: 1, 1: 1})
    assert lam.parts == (3, 2, 2, 1)
    assert lam.conjugate() == (4, 3, 1)
    assert lam.conjugate().conjugate() == lam
    with pytest.raises(PartitionValidationError):
        IntegerPartition((1, 2))
    with pytest.raises(PartitionValidationError):
        IntegerPartition((2, 0))
