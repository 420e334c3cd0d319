import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossfree import (
    BlockColoring,
    CrossFreePartition,
    DesignError,
    NotCrossFreeError,
    TripleSystem,
    audit_lower_bound,
    color_components,
    lemma_gn_coloring,
    plane_substitution_coloring,
    sharpness_arithmetic,
    transversal_blocks,
    validate_sts,
)
from crossfree.design import PairCoverage, lower_bound, replication_numbers

from conftest import nx_components, pair_counts


def test_fano_valid(fano):
    rep = validate_sts(fano)
    assert rep.ok and rep.n_blocks == 7 and rep.expected_blocks == 7


def test_fano_missing_block(fano):
    ts = TripleSystem(7, fano.blocks[1:])
    rep = validate_sts(ts)
    assert not rep.ok
    assert rep.uncovered == 3
    # first bad pair lexicographically: the removed block is (0, 1, 3)
    assert rep.pair == (0, 1)


def test_validate_names_double_cover(fano):
    ts = TripleSystem(7, list(fano.blocks) + [(0, 1, 2)])
    rep = validate_sts(ts)
    assert not rep.ok and rep.pair == (0, 1) and "2 times" in rep.violation


def test_constructed_21_valid(sts21):
    rep = validate_sts(sts21.ts)
    assert rep.ok and rep.n_blocks == 70


def test_structural_errors():
    with pytest.raises(DesignError):
        TripleSystem(5, [(0, 1, 1)])
    with pytest.raises(DesignError):
        TripleSystem(5, [(0, 1, 5)])
    with pytest.raises(DesignError):
        TripleSystem(5, [(0, 1, 2), (2, 1, 0)])
    with pytest.raises(DesignError):
        CrossFreePartition([[0, 1], [1, 2], [3, 4]])
    with pytest.raises(DesignError):
        CrossFreePartition([[0, 1], [2], [3, 4]])
    with pytest.raises(DesignError):
        transversal_blocks(TripleSystem(3, [(0, 1, 2)]), CrossFreePartition([[0], [1], [7]]))


def test_blocks_canonical_order():
    ts = TripleSystem(7, [(6, 0, 2), (3, 1, 0)])
    assert ts.blocks == ((0, 1, 3), (0, 2, 6))


@given(st.lists(st.tuples(*[st.integers(0, 8)] * 3).filter(lambda t: len(set(t)) == 3),
                max_size=20, unique_by=lambda t: tuple(sorted(t))))
def test_pair_coverage_matches_bruteforce(blocks):
    cov = PairCoverage(9, blocks)
    for (u, v), c in pair_counts(9, blocks).items():
        assert cov[u, v] == c == cov[v, u]


def test_transversal_examples(fano):
    assert transversal_blocks(fano, CrossFreePartition([[0], [1], [3]])) == [(0, 1, 3)]
    assert transversal_blocks(fano, CrossFreePartition([[0], [1], [2]])) == []


def test_constructed_is_cross_free(sts21):
    assert transversal_blocks(sts21.ts, sts21.partition) == []


def test_components_monochromatic(sts9):
    rep = color_components(sts9, BlockColoring(1, [0] * len(sts9)))
    assert rep.profile() == [[9]]


def test_components_parallel_classes():
    cs = plane_substitution_coloring(3)
    rep = color_components(cs.ts, cs.coloring)
    assert rep.profile() == [[3, 3, 3]] * 4


def test_trivial_components_reported(fano):
    col = BlockColoring(2, [0] + [1] * 6)
    rep = color_components(fano, col)
    assert len(rep.components[0]) == 1 + 4  # one block plus four singletons
    assert [len(c) for c in rep.nontrivial(0)] == [3]
    assert sum(len(c) for c in rep.components[0]) == 7


@settings(max_examples=40)
@given(st.lists(st.integers(0, 2), min_size=12, max_size=12))
def test_components_match_networkx(sts9, colors):
    rep = color_components(sts9, BlockColoring(3, colors))
    for c in range(3):
        ours = sorted(tuple(sorted(x)) for x in rep.nontrivial(c))
        assert ours == nx_components(9, sts9.blocks, colors, c)
        # components disjoint, and cover exactly the points touched by color c
        touched = {x for b, cc in zip(sts9.blocks, colors) if cc == c for x in b}
        assert set().union(*map(set, ours)) == touched
        assert sum(map(len, ours)) == len(touched)


def test_lemma_gn_coloring_sizes(sts21):
    col = lemma_gn_coloring(sts21.ts, sts21.partition)
    rep = color_components(sts21.ts, col)
    assert rep.largest == 15
    assert rep.profile() == [[15], [15], [15]]
    n = sts21.n
    for i, part in enumerate(sts21.partition.parts):
        assert rep.nontrivial(i)[0] == frozenset(range(n)) - part
        for b, c in zip(sts21.ts.blocks, col.colors):
            if c == i:
                assert not set(b) & part


def test_lemma_gn_block_inside_last_part():
    ts = TripleSystem(9, [(6, 7, 8)])
    p = CrossFreePartition([[0, 1, 2], [3, 4, 5], [6, 7, 8]])
    assert lemma_gn_coloring(ts, p).colors == (0,)


def test_lemma_gn_rejects_transversal(fano):
    with pytest.raises(NotCrossFreeError) as exc:
        lemma_gn_coloring(fano, CrossFreePartition([[0], [1], [3]]))
    assert exc.value.block == (0, 1, 3)


def test_audit_lower_bound(sts9, sts21):
    cs = plane_substitution_coloring(3)
    assert audit_lower_bound(cs.ts, cs.coloring)
    assert lower_bound(9, 4) == 3
    assert audit_lower_bound(sts9, BlockColoring(3, [0] * 12))
    col = lemma_gn_coloring(sts21.ts, sts21.partition)
    assert audit_lower_bound(sts21.ts, col)
    assert lower_bound(21, 3) == 11


def test_sharpness_examples():
    # k = 1: 9 < 12, 6 < 7, 63 < 70
    assert 3 * math.comb(3, 2) == 9 and math.comb(9, 2) / 3 == 12
    assert 3 + 3 * math.comb(2, 2) == 6 and math.comb(7, 2) / 3 == 7
    assert 3 * math.comb(7, 2) == 63 and 21 * 20 // 6 == 70
    assert sharpness_arithmetic(1, "6k+3")
    assert sharpness_arithmetic(1, "6k+1")


def test_sharpness_range():
    assert all(sharpness_arithmetic(k, v) for k in range(1, 1001) for v in ("6k+3", "6k+1"))
    with pytest.raises(DesignError):
        sharpness_arithmetic(0)


def test_replication_number(sts21):
    r = replication_numbers(sts21.ts)
    assert np.all(r == (sts21.n - 1) // 2)
