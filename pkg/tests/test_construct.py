import itertools

import networkx as nx
import pytest

from crossfree import construct_cross_free_sts, transversal_blocks, validate_sts
from crossfree.construct import (
    U_FACTOR_ROWS,
    ConstructionError,
    CopyLabeling,
    PartialTripleSystem,
    build_leave_graph,
    close_with_abc,
    extend_copy,
    factor_U,
    one_factorize_cubic,
)
from crossfree.design import DesignError, color_components, lemma_gn_coloring, sharpness_arithmetic
from crossfree.factorization import lemma_part_partition

from conftest import pair_counts


def partial(k):
    lp = lemma_part_partition(k)
    pts = PartialTripleSystem(18 * k + 3)
    added = [extend_copy(pts, lp, i) for i in range(3)]
    return lp, pts, added


@pytest.mark.parametrize("k", [1, 2, 3])
def test_extend_copy_counts(k):
    _, pts, added = partial(k)
    assert added == [k * (18 * k - 4)] * 3
    assert all(c <= 1 for c in pair_counts(pts.n, pts.blocks).values())


def test_extend_copy_k1_counts():
    _, _, added = partial(1)
    assert added == [14, 14, 14]


def test_extend_copy_double_cover_aborts():
    lp = lemma_part_partition(1)
    pts = PartialTripleSystem(21)
    extend_copy(pts, lp, 0)
    with pytest.raises(ConstructionError, match="covered twice"):
        extend_copy(pts, lp, 0)


def test_factor_apex_sees_whole_copy():
    k = 2
    lab = CopyLabeling(k)
    _, pts, _ = partial(k)
    for j in range(k):
        apex = lab.point(1, 6 * j + 2)
        touched = {x for b in pts.blocks if apex in b for x in b if x in lab.part(0)}
        assert touched == set(lab.part(0))


@pytest.mark.parametrize("k", [1, 2, 5])
def test_leave_graph_census(k):
    _, pts, _ = partial(k)
    U = build_leave_graph(pts, k)
    assert len(U) == 27 * k
    g = nx.Graph(U)
    assert all(d == 3 for _, d in g.degree())
    lab = CopyLabeling(k)
    inner = [e for e in U if e[0] // (6 * k) == e[1] // (6 * k)]
    assert sorted(inner) == sorted(
        (lab.point(i, 6 * j + 2), lab.point(i, 6 * j + 3)) for i in range(3) for j in range(k))
    for j in range(k):
        x = lab.point(1, 6 * j + 4)
        cross = {v for e in U if x in e for v in e if v != x and v in lab.part(0)}
        assert cross == {lab.point(0, 6 * j + 2), lab.point(0, 6 * j + 3)}


def test_leave_graph_k1_middles():
    _, pts, _ = partial(1)
    U = build_leave_graph(pts, 1)
    assert sorted(e for e in U if e[1] - e[0] == 1 and e[0] % 6 == 1) == [(1, 2), (7, 8), (13, 14)]


@pytest.mark.parametrize("k", [1, 2, 4])
def test_factor_U_explicit_rows(k):
    _, pts, _ = partial(k)
    U = build_leave_graph(pts, k)
    uf = factor_U(U, CopyLabeling(k))
    assert not uf.fallback
    assert all(len(f) == 9 * k for f in uf.factors)
    assert set().union(*map(set, uf.factors)) == set(U)


def test_factor_U_row1_example():
    lab = CopyLabeling(1)
    _, pts, _ = partial(1)
    f1 = set(factor_U(build_leave_graph(pts, 1), lab).factors[0])
    for a, b in [((1, 2), (1, 3)), ((1, 1), (0, 6)), ((1, 5), (0, 4))]:
        assert tuple(sorted((lab.point(*a), lab.point(*b)))) in f1


def test_factor_U_rows_cover_a4_cross_edges():
    lab = CopyLabeling(1)
    _, pts, _ = partial(1)
    uf = factor_U(build_leave_graph(pts, 1), lab)
    a4 = lab.point(1, 4)
    f2 = {e for e in uf.factors[1] if a4 in e}
    f3 = {e for e in uf.factors[2] if a4 in e}
    assert f2 == {tuple(sorted((a4, lab.point(0, 2))))}
    assert f3 == {tuple(sorted((a4, lab.point(0, 3))))}


def test_factor_U_fallback_fires_on_bad_rows():
    k = 2
    _, pts, _ = partial(k)
    U = build_leave_graph(pts, k)
    broken = (U_FACTOR_ROWS[0], U_FACTOR_ROWS[2], U_FACTOR_ROWS[1][:2] + U_FACTOR_ROWS[0][:1])
    uf = factor_U(U, CopyLabeling(k), rows=broken)
    assert uf.fallback and uf.reason
    assert set().union(*map(set, uf.factors)) == set(U)


def test_one_factorize_cubic_small_graphs():
    for g in (nx.complete_graph(4), nx.complete_bipartite_graph(3, 3),
              nx.hypercube_graph(3), nx.circular_ladder_graph(5)):
        g = nx.convert_node_labels_to_integers(g)
        fs = one_factorize_cubic(list(g.edges()), g.number_of_nodes())
        assert sorted(e for f in fs for e in f) == sorted(tuple(sorted(e)) for e in g.edges())
        for f in fs:
            assert nx.is_perfect_matching(g, f)


def test_one_factorize_petersen_fails():
    g = nx.petersen_graph()
    with pytest.raises(ConstructionError):
        one_factorize_cubic(list(g.edges()), 10)


def test_close_with_abc_census():
    k = 1
    lab = CopyLabeling(k)
    _, pts, _ = partial(k)
    uf = factor_U(build_leave_graph(pts, k), lab)
    ts = close_with_abc(pts, uf.factors, lab)
    assert len(ts) == 3 * k * (18 * k - 4) + 27 * k + 1 == 21 * 20 // 6
    assert ts.blocks.count(lab.abc) == 1
    for p in lab.abc:
        assert sum(p in b for b in ts.blocks) == 9 * k + 1


@pytest.mark.parametrize("k", [1, 2, 3, 6])
def test_construct(k):
    c = construct_cross_free_sts(k)
    n = 18 * k + 3
    assert c.n == n and len(c.ts) == n * (n - 1) // 6
    assert validate_sts(c.ts).ok
    assert c.partition.m == 6 * k
    assert transversal_blocks(c.ts, c.partition) == []
    assert c.partition.parts[0] == frozenset(range(6 * k))
    assert not c.fallback
    # no block meets any part three times in a way that breaks the coloring
    lab = c.partition.labels(n)
    for b in c.ts.blocks:
        assert len({int(lab[x]) for x in b} - {-1}) <= 2


def test_construct_k3_size():
    c = construct_cross_free_sts(3)
    assert c.n == 57 and len(c.ts) == 532 and c.partition.m == 18


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_lemma_gn_component_size(k):
    c = construct_cross_free_sts(k)
    rep = color_components(c.ts, lemma_gn_coloring(c.ts, c.partition))
    assert rep.profile() == [[12 * k + 3]] * 3


def test_no_larger_partition_by_counting():
    # three parts of size 6k+1 would leave too few pairs for the blocks
    for k in range(1, 31):
        assert sharpness_arithmetic(k)


def test_deterministic():
    construct_cross_free_sts.cache_clear()
    a = construct_cross_free_sts(2).ts.blocks
    construct_cross_free_sts.cache_clear()
    assert construct_cross_free_sts(2).ts.blocks == a


def test_bad_k():
    with pytest.raises(DesignError):
        construct_cross_free_sts(0)


def test_copy_labeling():
    lab = CopyLabeling(2)
    assert lab.point(3, 1) == lab.point(0, 1) == 0
    assert lab.point(-1, 12) == 35
    assert lab.abc == (36, 37, 38)
    assert list(itertools.chain(*(lab.part(i) for i in range(3)))) == list(range(36))
