"""STS(18k+3) containing a cross-free set of size 6k.

Point layout: copy ``i`` (i = 0, 1, 2) of the abstract labels ``a_1..a_{6k}``
occupies points ``6k*i .. 6k*i + 6k - 1`` in label order; the three closing
points A, B, C are ``18k, 18k+1, 18k+2``.  The cross-free parts are the three
copies.
"""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .design import (
    CrossFreePartition,
    DesignError,
    PairCoverage,
    TripleSystem,
    transversal_blocks,
    validate_sts,
)
from .factorization import LemmaPartition, lemma_part_partition, verify_lemma_part

log = logging.getLogger(__name__)

Edge = tuple[int, int]


class ConstructionError(DesignError):
    """A stage of the construction failed its own postcondition."""


@dataclass(frozen=True)
class CopyLabeling:
    k: int

    def point(self, copy: int, label: int) -> int:
        """Global point of ``a_label`` (1-based) in ``copy`` (taken mod 3)."""
        if not 1 <= label <= 6 * self.k:
            raise ValueError(f"label {label} out of range")
        return 6 * self.k * (copy % 3) + label - 1

    def part(self, copy: int) -> range:
        m = 6 * self.k
        return range(m * copy, m * (copy + 1))

    @property
    def abc(self) -> tuple[int, int, int]:
        base = 18 * self.k
        return base, base + 1, base + 2


class PartialTripleSystem:
    """Blocks whose pairs are each covered at most once."""

    def __init__(self, n: int):
        self.n = n
        self.blocks: list[tuple[int, int, int]] = []
        self.coverage = PairCoverage(n)

    def add(self, blocks: list[tuple[int, int, int]]) -> None:
        blocks = [tuple(sorted(b)) for b in blocks]
        self.coverage.add(blocks)
        if self.coverage.max_count() > 1:
            u, v = self.coverage.pairs_with_count(self.coverage.max_count())[0]
            raise ConstructionError(f"pair ({u}, {v}) covered twice")
        self.blocks.extend(blocks)  # type: ignore[arg-type]


def _abstract_matching(lp: LemmaPartition, matching) -> list[tuple[int, int]]:
    ab = lp.abstract()
    return [(ab[u] + 1, ab[v] + 1) for u, v in matching]


def extend_copy(pts: PartialTripleSystem, lp: LemmaPartition, source: int,
                labels: CopyLabeling | None = None) -> int:
    """Add the blocks pairing matchings on ``source`` with apexes in ``source + 1``.

    Returns the number of blocks added.
    """
    labels = labels or CopyLabeling(lp.k)
    apex = source + 1
    new = []
    for j in range(lp.k):
        g = 6 * j
        jobs = [
            (g + 4, lp.near_factors[4 * j]),
            (g + 1, lp.near_factors[4 * j + 1]),
            (g + 6, lp.near_factors[4 * j + 2]),
            (g + 5, lp.near_factors[4 * j + 3]),
            (g + 2, lp.factors[2 * j]),
            (g + 3, lp.factors[2 * j + 1]),
        ]
        for apex_label, matching in jobs:
            x = labels.point(apex, apex_label)
            for s, t in _abstract_matching(lp, matching):
                new.append((x, labels.point(source, s), labels.point(source, t)))
    pts.add(new)
    return len(new)


def build_leave_graph(pts: PartialTripleSystem, k: int) -> list[Edge]:
    """Uncovered pairs among the 18k copy points; checks the expected census."""
    m = 18 * k
    cov = pts.coverage.counts[:m, :m]
    iu, ju = np.nonzero(np.triu(cov == 0, k=1))
    edges = list(zip(iu.tolist(), ju.tolist()))
    deg = np.bincount(np.concatenate([iu, ju]), minlength=m) if edges else np.zeros(m, int)
    if len(edges) != 27 * k or not (deg == 3).all():
        raise ConstructionError(f"leave graph has {len(edges)} edges and degrees "
                                f"{sorted(set(deg.tolist()))}, expected 27k edges, 3-regular")
    side = np.asarray(edges) // (6 * k)
    inner = int((side[:, 0] == side[:, 1]).sum())
    if inner != 3 * k:
        raise ConstructionError(f"leave graph has {inner} inner edges, expected {3 * k}")
    return edges


# Each pair is ((copy offset, label), (copy offset, label)); offset 0 is copy i,
# -1 is copy i-1.  Labels are 1..6 within group j.
U_FACTOR_ROWS = (
    (((0, 2), (0, 3)), ((0, 1), (-1, 6)), ((0, 5), (-1, 4))),
    (((0, 4), (-1, 2)), ((0, 5), (-1, 3)), ((0, 6), (-1, 1))),
    (((0, 1), (-1, 5)), ((0, 4), (-1, 3)), ((0, 6), (-1, 2))),
)


@dataclass
class UFactorization:
    factors: list[list[Edge]]
    fallback: bool
    reason: str = ""


def _check_one_factorization(factors: list[list[Edge]], edges: list[Edge], n: int) -> str:
    target = {tuple(sorted(e)) for e in edges}
    seen: set[Edge] = set()
    for t, f in enumerate(factors):
        pts = [x for e in f for x in e]
        if len(pts) != n or len(set(pts)) != n:
            return f"factor {t + 1} is not a perfect matching"
        for e in f:
            e = tuple(sorted(e))
            if e not in target:
                return f"factor {t + 1} edge {e} is not in U"
            if e in seen:
                return f"edge {e} in two factors"
            seen.add(e)
    if seen != target:
        return f"{len(target - seen)} edges of U not covered"
    return ""


def one_factorize_cubic(edges: list[Edge], n: int, budget: int = 10**6) -> list[list[Edge]]:
    """Split a 3-regular graph into three perfect matchings by backtracking.

    This is 3-edge-coloring; it raises if the graph is not class one or the
    node budget runs out.
    """
    edges = [tuple(sorted(e)) for e in edges]
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for idx, (u, v) in enumerate(edges):
        adj[u].append(idx)
        adj[v].append(idx)
    if any(len(a) != 3 for a in adj.values()):
        raise ConstructionError("graph is not 3-regular")
    # order edges by BFS so each new edge touches colored ones
    order: list[int] = []
    placed = [False] * len(edges)
    for root in range(n):
        queue = [root]
        for v in queue:
            for idx in adj[v]:
                if not placed[idx]:
                    placed[idx] = True
                    order.append(idx)
                    u, w = edges[idx]
                    queue.append(w if u == v else u)
    color = [-1] * len(edges)
    used = {v: [False] * 3 for v in range(n)}
    nodes = 0

    def go(pos: int) -> bool:
        nonlocal nodes
        if pos == len(order):
            return True
        nodes += 1
        if nodes > budget:
            raise ConstructionError(f"1-factorization search exceeded budget {budget}")
        idx = order[pos]
        u, v = edges[idx]
        for c in range(3):
            if not used[u][c] and not used[v][c]:
                used[u][c] = used[v][c] = True
                color[idx] = c
                if go(pos + 1):
                    return True
                used[u][c] = used[v][c] = False
        color[idx] = -1
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, len(edges) + 100))
    try:
        ok = go(0)
    finally:
        sys.setrecursionlimit(limit)
    if not ok:
        raise ConstructionError("graph has no 1-factorization")
    return [[edges[i] for i in range(len(edges)) if color[i] == c] for c in range(3)]


def factor_U(edges: list[Edge], labels: CopyLabeling, rows=U_FACTOR_ROWS) -> UFactorization:
    """Three 1-factors of the leave graph, from the explicit rows when they check out."""
    k = labels.k
    factors = []
    for row in rows:
        f = []
        for i in range(3):
            for j in range(k):
                for (o1, l1), (o2, l2) in row:
                    f.append(tuple(sorted((labels.point(i + o1, 6 * j + l1),
                                           labels.point(i + o2, 6 * j + l2)))))
        factors.append(f)
    reason = _check_one_factorization(factors, edges, 18 * k)
    if not reason:
        return UFactorization(factors, fallback=False)
    log.warning("explicit factors of U rejected for k=%d (%s); using search", k, reason)
    factors = one_factorize_cubic(edges, 18 * k)
    again = _check_one_factorization(factors, edges, 18 * k)
    if again:
        raise ConstructionError(f"fallback factorization invalid: {again}")
    return UFactorization(factors, fallback=True, reason=reason)


def close_with_abc(pts: PartialTripleSystem, factors: list[list[Edge]],
                   labels: CopyLabeling) -> TripleSystem:
    abc = labels.abc
    for point, f in zip(abc, factors):
        pts.add([(u, v, point) for u, v in f])
    pts.add([abc])
    ts = TripleSystem(pts.n, pts.blocks)
    rep = validate_sts(ts)
    if not rep.ok:
        raise ConstructionError(f"closed system is not an STS: {rep.violation}")
    return ts


@dataclass(frozen=True)
class Construction:
    k: int
    ts: TripleSystem
    partition: CrossFreePartition
    fallback: bool
    labeling: LemmaPartition

    @property
    def n(self) -> int:
        return self.ts.n


@lru_cache(maxsize=64)
def construct_cross_free_sts(k: int) -> Construction:
    if k < 1:
        raise DesignError("k must be >= 1")
    lp = lemma_part_partition(k)
    rep = verify_lemma_part(lp)
    if not rep.ok:
        raise ConstructionError("; ".join(rep.problems[:5]))
    labels = CopyLabeling(k)
    n = 18 * k + 3
    pts = PartialTripleSystem(n)
    for source in range(3):
        added = extend_copy(pts, lp, source, labels)
        if added != k * (18 * k - 4):
            raise ConstructionError(f"copy {source}: added {added} blocks")
    U = build_leave_graph(pts, k)
    uf = factor_U(U, labels)
    ts = close_with_abc(pts, uf.factors, labels)
    part = CrossFreePartition([labels.part(i) for i in range(3)])
    bad = transversal_blocks(ts, part)
    if bad:
        raise ConstructionError(f"transversal block {bad[0]}")
    return Construction(k, ts, part, uf.fallback, lp)
