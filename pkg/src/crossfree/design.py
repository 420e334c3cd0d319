"""Triple systems, pair coverage, monochromatic components and cross-free sets."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

Block = tuple[int, int, int]


class DesignError(ValueError):
    """Raised when an input violates a structural precondition."""


class NotCrossFreeError(DesignError):
    def __init__(self, block: Block):
        super().__init__(f"block {block} meets all three parts")
        self.block = block


def _norm_block(b: Iterable[int]) -> Block:
    t = tuple(sorted(int(x) for x in b))
    if len(t) != 3:
        raise DesignError(f"block {t} does not have 3 points")
    return t  # type: ignore[return-value]


@dataclass(frozen=True)
class TripleSystem:
    """A set of 3-point blocks on the points ``0..n-1``.

    Blocks are stored sorted, and the block list is sorted lexicographically,
    so two systems with the same blocks compare (and serialize) identically.
    Exact pair coverage is *not* enforced here; use :func:`validate_sts`.
    """

    n: int
    blocks: tuple[Block, ...]

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        bl = sorted(_norm_block(b) for b in blocks)
        for b in bl:
            if b[0] == b[1] or b[1] == b[2]:
                raise DesignError(f"block {b} has repeated points")
            if b[0] < 0 or b[2] >= n:
                raise DesignError(f"block {b} out of range for n={n}")
        for a, b in zip(bl, bl[1:]):
            if a == b:
                raise DesignError(f"duplicate block {a}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "blocks", tuple(bl))

    def __len__(self) -> int:
        return len(self.blocks)

    def block_index(self) -> dict[tuple[int, int], int]:
        """Map each covered pair ``(u, v)``, ``u < v``, to the third point of its block."""
        third = {}
        for a, b, c in self.blocks:
            third[a, b] = c
            third[a, c] = b
            third[b, c] = a
        return third


class PairCoverage:
    """Symmetric ``n x n`` count matrix: how many blocks contain each pair."""

    def __init__(self, n: int, blocks: Iterable[Sequence[int]] = ()):
        self.n = n
        self.counts = np.zeros((n, n), dtype=np.int32)
        self.add(blocks)

    def add(self, blocks: Iterable[Sequence[int]]) -> None:
        arr = np.asarray(list(blocks), dtype=np.intp).reshape(-1, 3)
        if not len(arr):
            return
        for i, j in ((0, 1), (0, 2), (1, 2)):
            np.add.at(self.counts, (arr[:, i], arr[:, j]), 1)
            np.add.at(self.counts, (arr[:, j], arr[:, i]), 1)

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return int(self.counts[pair])

    def pairs_with_count(self, c: int) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.counts == c, k=1))
        return list(zip(iu.tolist(), ju.tolist()))

    def max_count(self) -> int:
        return int(self.counts.max()) if self.n else 0


@dataclass(frozen=True)
class ValidityReport:
    ok: bool
    n_blocks: int
    expected_blocks: int
    violation: str | None = None
    pair: tuple[int, int] | None = None
    uncovered: int = 0
    overcovered: int = 0

    def __bool__(self) -> bool:
        return self.ok


def validate_sts(ts: TripleSystem) -> ValidityReport:
    """Check that every pair lies in exactly one block.

    The reported pair is the lexicographically first bad pair, whichever kind
    of violation it is.
    """
    n = ts.n
    expected = n * (n - 1) // 6 if n * (n - 1) % 6 == 0 else -1
    cov = PairCoverage(n, ts.blocks)
    bad = np.triu(cov.counts != 1, k=1)
    under = int(np.triu(cov.counts == 0, k=1).sum())
    over = int(np.triu(cov.counts > 1, k=1).sum())
    if bad.any():
        iu, ju = np.nonzero(bad)
        u, v = int(iu[0]), int(ju[0])
        kind = "uncovered" if cov[u, v] == 0 else f"covered {cov[u, v]} times"
        return ValidityReport(False, len(ts), expected, f"pair ({u}, {v}) {kind}",
                              (u, v), under, over)
    if len(ts) != expected:
        return ValidityReport(False, len(ts), expected,
                              f"{len(ts)} blocks, expected {expected}")
    return ValidityReport(True, len(ts), expected)


@dataclass(frozen=True)
class CrossFreePartition:
    """Three disjoint, equal-size point sets (a candidate cross-free set)."""

    parts: tuple[frozenset[int], frozenset[int], frozenset[int]]

    def __init__(self, parts: Sequence[Iterable[int]]):
        ps = tuple(frozenset(int(x) for x in p) for p in parts)
        if len(ps) != 3:
            raise DesignError("a cross-free partition has exactly three parts")
        if len({len(p) for p in ps}) != 1:
            raise DesignError(f"part sizes differ: {[len(p) for p in ps]}")
        for i in range(3):
            for j in range(i + 1, 3):
                common = ps[i] & ps[j]
                if common:
                    raise DesignError(f"parts {i} and {j} share point {min(common)}")
        object.__setattr__(self, "parts", ps)

    @property
    def m(self) -> int:
        return len(self.parts[0])

    def check_range(self, n: int) -> None:
        for i, p in enumerate(self.parts):
            if p and (min(p) < 0 or max(p) >= n):
                raise DesignError(f"part {i} has points outside 0..{n - 1}")

    def labels(self, n: int) -> np.ndarray:
        """Part index per point, -1 for points in no part."""
        lab = np.full(n, -1, dtype=np.int8)
        for i, p in enumerate(self.parts):
            lab[list(p)] = i
        return lab


def transversal_blocks(ts: TripleSystem, p: CrossFreePartition) -> list[Block]:
    """Blocks with exactly one point in each part; empty iff ``p`` is cross-free."""
    p.check_range(ts.n)
    if not ts.blocks:
        return []
    lab = p.labels(ts.n)
    arr = np.asarray(ts.blocks)
    parts = lab[arr]
    hit = np.sort(parts, axis=1)
    mask = (hit[:, 0] == 0) & (hit[:, 1] == 1) & (hit[:, 2] == 2)
    return [ts.blocks[i] for i in np.nonzero(mask)[0]]


@dataclass(frozen=True)
class BlockColoring:
    """Colors aligned with ``ts.blocks``; colors are ``0..r-1``."""

    r: int
    colors: tuple[int, ...]

    def __init__(self, r: int, colors: Iterable[int]):
        cs = tuple(int(c) for c in colors)
        if any(c < 0 or c >= r for c in cs):
            raise DesignError(f"color out of range 0..{r - 1}")
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "colors", cs)


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return sorted(out.values())


@dataclass
class ComponentReport:
    """Per color, the components of that color's subhypergraph.

    Each color's list holds every point exactly once; points covered by no
    block of the color appear as singleton (trivial) components.
    """

    n: int
    components: list[list[frozenset[int]]]
    nontrivial_mask: list[list[bool]] = field(repr=False)

    def nontrivial(self, color: int) -> list[frozenset[int]]:
        return [c for c, nt in zip(self.components[color], self.nontrivial_mask[color]) if nt]

    def profile(self) -> list[list[int]]:
        """Sorted (descending) nontrivial component sizes per color."""
        return [sorted((len(c) for c in self.nontrivial(i)), reverse=True)
                for i in range(len(self.components))]

    @property
    def largest(self) -> int:
        """Size of the largest nontrivial monochromatic component (0 if none)."""
        return max((len(c) for i in range(len(self.components)) for c in self.nontrivial(i)),
                   default=0)


def color_components(ts: TripleSystem, c: BlockColoring) -> ComponentReport:
    if len(c.colors) != len(ts.blocks):
        raise DesignError(f"coloring has {len(c.colors)} entries for {len(ts.blocks)} blocks")
    ufs = [UnionFind(ts.n) for _ in range(c.r)]
    covered = [[False] * ts.n for _ in range(c.r)]
    for (a, b, d), col in zip(ts.blocks, c.colors):
        uf = ufs[col]
        uf.union(a, b)
        uf.union(a, d)
        cov = covered[col]
        cov[a] = cov[b] = cov[d] = True
    comps, masks = [], []
    for col in range(c.r):
        groups = ufs[col].groups()
        comps.append([frozenset(g) for g in groups])
        masks.append([covered[col][g[0]] for g in groups])
    return ComponentReport(ts.n, comps, masks)


def lemma_gn_coloring(ts: TripleSystem, p: CrossFreePartition) -> BlockColoring:
    """3-color blocks by the first part they avoid.

    Every color class then lives inside the complement of its part, so each
    monochromatic component has at most ``n - m`` points.
    """
    p.check_range(ts.n)
    lab = p.labels(ts.n)
    colors = []
    for b in ts.blocks:
        hit = {int(lab[x]) for x in b}
        for i in range(3):
            if i not in hit:
                colors.append(i)
                break
        else:
            raise NotCrossFreeError(b)
    return BlockColoring(3, colors)


def lower_bound(n: int, r: int) -> int:
    """Guaranteed monochromatic component size, ``ceil(n / (r - 1))``."""
    if r < 2:
        return n
    return -(-n // (r - 1))


def audit_lower_bound(ts: TripleSystem, c: BlockColoring) -> bool:
    rep = color_components(ts, c)
    return rep.largest >= lower_bound(ts.n, c.r)


def sharpness_arithmetic(k: int, variant: str = "6k+3") -> bool:
    """Counting inequalities showing larger cross-free sets are impossible.

    ``variant`` picks the residue class of the first inequality; the
    inequality for three parts of size 6k+1 in an STS(18k+3) is always
    checked as well.
    """
    if k < 1:
        raise DesignError("k must be >= 1")
    C = math.comb
    # compare 3*lhs < C(n,2) to stay in integers
    if variant == "6k+3":
        first = 3 * (3 * C(2 * k + 1, 2)) < C(6 * k + 3, 2)
    elif variant == "6k+1":
        first = 3 * (3 * k + 3 * C(2 * k, 2)) < C(6 * k + 1, 2)
    else:
        raise DesignError(f"unknown variant {variant!r}")
    n = 18 * k + 3
    second = 6 * (3 * C(6 * k + 1, 2)) < n * (n - 1)
    return first and second


def replication_numbers(ts: TripleSystem) -> np.ndarray:
    """Number of blocks through each point."""
    return np.bincount(np.asarray(ts.blocks, dtype=np.intp).ravel(), minlength=ts.n)


FANO = TripleSystem(7, [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)])
