# -*- coding: utf-8 -*-
"""Test linear and circular crossing numbers."""
import pytest

from setcross.crossings import (
    Arc,
    arcs,
    chords,
    cr,
    cr_circular,
    cr_linear,
    crossing_pairs,
    z_decompose,
)
from setcross.partitions import enumerate_all, parse_partition

FIGURE_PARTITION = "1 10/2 3 7 9/4/5 6 12/8 11"


def test_figure_partition_values():
    """Verify the worked example: 9 circular and 4 linear crossings."""
    assert cr_circular(FIGURE_PARTITION) == 9
    assert cr_linear(FIGURE_PARTITION) == 4
    assert len(arcs(FIGURE_PARTITION)) == 12 - 5
    assert len(crossing_pairs(FIGURE_PARTITION, "circular")) == 9


@pytest.mark.parametrize(
    "partition,linear,circular",
    [("1 3/2 4", 1, 1), ("1 4/2 3", 0, 0), ("1/2/3/4", 0, 0), ("1 2 3 4", 0, 0)],
)
def test_small_examples(partition, linear, circular):
    """Verify crossing numbers of small partitions."""
    assert cr_linear(partition) == linear
    assert cr_circular(partition) == circular
    assert cr(partition, "linear") == linear
    assert cr(partition, "circular") == circular


def test_arcs_and_chords():
    """Verify segments of the linear and circular representations."""
    assert arcs("1 3 5/2 4") == [Arc(1, 3), Arc(3, 5), Arc(2, 4)]
    assert arcs("1/2/3") == []
    assert chords("1/2/3") == []
    block_two = [(c.a, c.b) for c in chords(FIGURE_PARTITION) if c.block_id == 2]
    assert block_two == [(2, 3), (3, 7), (7, 9), (2, 9)]
    block_one = [(c.a, c.b) for c in chords(FIGURE_PARTITION) if c.block_id == 1]
    assert block_one == [(1, 10)]


def test_circular_exceeds_linear_on_wrapping_blocks():
    """Verify the closing chord can add crossings absent from the linear form."""
    # the closing chord (1, 4) of 1 2 4 crosses (3, 5)
    assert cr_linear("1 2 4/3 5") == 1
    assert cr_circular("1 2 4/3 5") == 2


@pytest.mark.parametrize("n", range(1, 10))
def test_sandwich_inequality(n):
    """Verify cr_l <= cr_c <= cr_l + 2k(k-1) over all partitions of [n]."""
    for p in enumerate_all(n):
        linear, circular = cr_linear(p), cr_circular(p)
        upper = linear + 2 * p.k * (p.k - 1)
        assert linear <= circular <= upper, f"Sandwich fails for {p}."


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("stat", ["linear", "circular"])
def test_z_property(n, stat):
    """Verify block-pair contributions sum to the full statistic."""
    for p in enumerate_all(n):
        entries = z_decompose(p, stat)
        assert len(entries) == p.k * (p.k - 1) // 2
        assert sum(entries.values()) == cr(p, stat), f"Z-property fails for {p}."


@pytest.mark.parametrize("n", range(1, 9))
def test_same_block_chords_never_cross(n):
    """Verify every crossing chord pair comes from two different blocks."""
    for p in enumerate_all(n):
        pairs = crossing_pairs(p, "circular")
        assert all(x.block_id != y.block_id for x, y in pairs)


def test_statistics_ignore_presentation():
    """Verify text, RGS and block inputs give the same values."""
    p = parse_partition(FIGURE_PARTITION)
    for form in (p, str(p), p.rgs, p.blocks):
        assert cr_linear(form) == 4
        assert cr_circular(form) == 9


def test_z_decompose_examples():
    """Verify documented decompositions."""
    assert z_decompose("1 2 3", "linear") == {}
    assert z_decompose("1 3/2 4", "linear") == {(1, 2): 1}
    assert sum(z_decompose(FIGURE_PARTITION, "circular").values()) == 9
