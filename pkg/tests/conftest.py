import itertools

import networkx as nx
import pytest

from crossfree import FANO, TripleSystem, bose_sts, construct_cross_free_sts


def pair_counts(n, blocks):
    """Independent pair-coverage count, pure Python."""
    counts = {p: 0 for p in itertools.combinations(range(n), 2)}
    for b in blocks:
        for p in itertools.combinations(sorted(b), 2):
            counts[p] += 1
    return counts


def nx_components(n, blocks, colors, color):
    """Nontrivial components of one color via networkx, as sorted tuples."""
    g = nx.Graph()
    for b, c in zip(blocks, colors):
        if c == color:
            nx.add_path(g, b)
    return sorted(tuple(sorted(c)) for c in nx.connected_components(g))


@pytest.fixture
def fano():
    return FANO


@pytest.fixture(scope="session")
def sts9():
    return bose_sts(9)


@pytest.fixture(scope="session")
def sts21():
    return construct_cross_free_sts(1)


@pytest.fixture
def relabel():
    def _relabel(ts, perm):
        return TripleSystem(ts.n, [[perm[x] for x in b] for b in ts.blocks])
    return _relabel
