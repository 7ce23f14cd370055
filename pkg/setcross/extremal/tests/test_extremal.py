# -*- coding: utf-8 -*-
"""Test maximal crossing numbers, maximizing shapes and maximizer counts."""
from collections import defaultdict
from functools import lru_cache

import pytest

from setcross.crossings import cr
from setcross.exceptions import PreconditionError
from setcross.extremal import (
    argmax_blocks,
    build_pi,
    g_sequence,
    global_maximizer_witnesses,
    lambda_star,
    max_block,
    max_global,
    max_pair,
    maxima_report,
    maximizer_count,
    maximizer_count_global,
    maximizer_shapes,
    move_delta,
    nonconsecutive_pairs,
    weight,
    weights_RT,
)
from setcross.partitions import (
    block_sizes,
    enumerate_all,
    enumerate_k,
    integer_partitions,
)

STATS = ["linear", "circular"]
BRUTE_SIZES = [*range(1, 10), pytest.param(10, marks=pytest.mark.slow)]


@lru_cache(maxsize=None)
def _brute_table(n):
    """Per-k maxima, global maxima and linear maximizer counts of Pi_n."""
    values = defaultdict(list)
    for p in enumerate_all(n):
        values[p.k].append((cr(p, "linear"), cr(p, "circular")))
    block_max = {}
    block_count = {}
    for k, pairs in values.items():
        block_max[k] = (max(x for x, _ in pairs), max(y for _, y in pairs))
        block_count[k] = sum(1 for x, _ in pairs if x == block_max[k][0])
    top = (
        max(v[0] for v in block_max.values()),
        max(v[1] for v in block_max.values()),
    )
    global_count = sum(
        1 for pairs in values.values() for x, _ in pairs if x == top[0]
    )
    return block_max, block_count, top, global_count


@pytest.mark.parametrize(
    "n,k,stat,expected",
    [
        (12, 3, "linear", 15),
        (12, 8, "linear", 6),
        (10, 5, "circular", 10),
        (12, 5, "circular", 24),
        (9, 3, "linear", 9),
        (9, 4, "linear", 9),
        (6, 2, "circular", 6),
    ],
)
def test_max_block_examples(n, k, stat, expected):
    """Verify worked maxima over Pi_n^k."""
    msg = f"max_block({n}, {k}, {stat}) should be {expected}. "
    msg += f"Expected {expected}, but returned {max_block(n, k, stat)}."
    assert max_block(n, k, stat) == expected, msg


@pytest.mark.parametrize("n", BRUTE_SIZES)
def test_max_block_matches_enumeration(n):
    """Verify the closed-form maxima against exhaustive enumeration."""
    block_max, _, top, _ = _brute_table(n)
    for k in range(1, n + 1):
        assert max_block(n, k, "linear") == block_max[k][0]
        assert max_block(n, k, "circular") == block_max[k][1]
    assert max_global(n, "linear") == top[0]
    assert max_global(n, "circular") == top[1]


@pytest.mark.parametrize("n", BRUTE_SIZES)
def test_maximizer_counts_match_enumeration(n):
    """Verify the linear maximizer counts against exhaustive enumeration."""
    _, block_count, _, global_count = _brute_table(n)
    for k in range(1, n + 1):
        msg = f"Maximizer count at n={n}, k={k}. "
        msg += f"Expected {block_count[k]}, but returned {maximizer_count(n, k)}."
        assert maximizer_count(n, k) == block_count[k], msg
    assert maximizer_count_global(n) == global_count


@pytest.mark.parametrize("n", range(4, 10))
def test_global_witnesses_are_all_maximizers(n):
    """Verify the listed global linear maximizers are exactly the maximizers."""
    top = max_global(n)
    brute = {p for p in enumerate_all(n) if cr(p, "linear") == top}
    assert set(global_maximizer_witnesses(n)) == brute


@pytest.mark.parametrize("stat", STATS)
def test_global_maximum_over_blocks(stat):
    """Verify the global maximum is the largest per-k maximum for n <= 60."""
    for n in range(1, 61):
        per_block = [max_block(n, k, stat) for k in range(1, n + 1)]
        assert max(per_block) == max_global(n, stat)
        assert argmax_blocks(n, stat) == [
            k for k, v in enumerate(per_block, start=1) if v == max(per_block)
        ]


def test_global_examples():
    """Verify the worked global maxima and maximizing block counts."""
    assert max_global(10) == 12
    assert max_global(9, "circular") == 18
    assert argmax_blocks(9) == [3, 4]
    assert maximizer_count_global(9) == 2
    assert maximizer_count(6, 4) == 15
    assert maximizer_count(12, 3) == 1


@pytest.mark.parametrize("n", range(1, 31))
def test_construction_attains_maxima(n):
    """Verify pi(lambda) attains the maximum for every maximizing shape."""
    for k in range(1, n + 1):
        linear = build_pi(lambda_star(n, k))
        assert cr(linear, "linear") == max_block(n, k, "linear")
        for shape in maximizer_shapes(n, k, "circular"):
            witness = build_pi(shape)
            assert block_sizes(witness) == shape
            assert cr(witness, "circular") == max_block(n, k, "circular")


@pytest.mark.parametrize("n", range(1, 21))
def test_shapes_are_weight_maximizers(n):
    """Verify maximizer_shapes lists exactly the weight maximizers of P(n, k)."""
    for k in range(1, n + 1):
        shapes = list(integer_partitions(n, k))
        for stat in STATS:
            best = max(weight(lam, stat) for lam in shapes)
            argmax = sorted(lam for lam in shapes if weight(lam, stat) == best)
            assert sorted(maximizer_shapes(n, k, stat)) == argmax
            assert best == max_block(n, k, stat)


@pytest.mark.parametrize("n", range(1, 9))
def test_weight_is_maximum_per_shape(n):
    """Verify the weight of a shape is the largest crossing number with it."""
    best = defaultdict(lambda: [0, 0])
    for p in enumerate_all(n):
        shape = block_sizes(p)
        for i, stat in enumerate(STATS):
            value = cr(p, stat)
            assert value <= weight(shape, stat)
            best[shape][i] = max(best[shape][i], value)
    for shape, (linear, circular) in best.items():
        assert weight(shape, "linear") == linear
        assert weight(shape, "circular") == circular
        assert cr(build_pi(shape), "linear") == linear
        assert cr(build_pi(shape), "circular") == circular


def test_max_pair_matches_two_block_enumeration():
    """Verify the two-block maxima against enumeration of Pi_n^2."""
    best = defaultdict(lambda: [0, 0])
    for n in range(2, 11):
        for p in enumerate_k(n, 2):
            a, b = sorted(len(block) for block in p.blocks)
            for i, stat in enumerate(STATS):
                best[(b, a)][i] = max(best[(b, a)][i], cr(p, stat))
    for (a, b), (linear, circular) in best.items():
        assert max_pair(a, b, "linear") == linear
        assert max_pair(b, a, "circular") == circular


def test_m_equals_r_minus_t():
    """Verify both weights equal R minus the matching T for n <= 25."""
    for n in range(1, 26):
        for lam in integer_partitions(n):
            r_weight, t_linear, t_circular = weights_RT(lam)
            assert weight(lam, "linear") == r_weight - t_linear
            assert weight(lam, "circular") == r_weight - t_circular


def test_move_deltas_match_recomputation():
    """Verify the predicted deltas of every applicable move for n <= 15."""
    checked = 0
    for n in range(1, 16):
        for lam in integer_partitions(n):
            before = weights_RT(lam)
            for u, v in nonconsecutive_pairs(lam):
                move = move_delta(lam, u, v)
                after = weights_RT(move.partition)
                assert move.partition.n == n and move.partition.k == lam.k
                assert move.delta_R == after.R - before.R
                assert move.delta_T_linear == after.T_linear - before.T_linear
                assert move.delta_T_circular == after.T_circular - before.T_circular
                checked += 1
    assert checked > 0


def test_moves_increase_weights():
    """Verify moves raise the linear weight and, away from (1, 3), the circular."""
    for n in range(1, 16):
        for lam in integer_partitions(n):
            for u, v in nonconsecutive_pairs(lam):
                moved = move_delta(lam, u, v).partition
                assert weight(moved, "linear") > weight(lam, "linear")
                if (u, v) != (1, 3):
                    assert weight(moved, "circular") >= weight(lam, "circular") + 2


def test_move_delta_examples_and_rejection():
    """Verify worked moves and the precondition on u, v."""
    move = move_delta((3, 1), 1, 3)
    assert move.partition == (2, 2)
    assert move.delta_R == 2
    assert move_delta((4, 1), 1, 4).delta_T_circular == 0
    assert move_delta((5, 3, 3), 3, 5).delta_T_circular == 0
    with pytest.raises(PreconditionError):
        move_delta((3, 2), 2, 3)
    with pytest.raises(PreconditionError):
        move_delta((3, 1), 2, 4)


def test_g_sequence_strictly_increasing():
    """Verify g_n(k) is strictly increasing in k for n <= 200."""
    assert g_sequence(10)[:3] == [0, 10, 18]
    for n in range(1, 201):
        values = g_sequence(n)
        assert values[0] == 0
        assert all(a < b for a, b in zip(values, values[1:]))


def test_shapes_and_construction_examples():
    """Verify the worked shapes and Ferrers fillings."""
    assert lambda_star(7, 3) == (3, 2, 2)
    assert [str(s) for s in maximizer_shapes(12, 5, "circular")] == ["(3,3,3,2,1)"]
    assert maximizer_shapes(9, 4) == [lambda_star(9, 4)]
    assert str(build_pi((4, 2, 1))) == "1 4 6 7/2 5/3"
    assert str(build_pi((5,))) == "1 2 3 4 5"
    assert cr(build_pi((2, 2)), "linear") == 1


def test_maxima_report():
    """Verify reports carry a witness with the claimed value."""
    report = maxima_report(9, 4, "circular")
    assert cr(report.witness, "circular") == report.max_value == 10
    data = report.to_json()
    assert data["max_value"] == "10"
    assert data["witness"] == str(report.witness)
    overall = maxima_report(10, stat="circular")
    assert overall.k is None
    assert overall.blocks == (3, 4)
    assert overall.max_value == 18
