"""Standard 1-factorization of K_{6k} and its split into factors and near-factors.

Vertices are ``1..6k-1`` plus the point at infinity, which is encoded as
``0`` (``INF``) so the mod-(6k-1) arithmetic can be written literally.

The split keeps the factors that host no edge of a gadget graph ``Z_k``
(isomorphic to ``H_k``: k paths on 4 vertices plus k single edges), deletes
each ``Z_k`` edge from its host factor to get near-factors, and turns the
non-middle edges of ``Z_k`` into one extra factor.  The middle edges form the
leave matching ``T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .design import DesignError

INF = 0

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _res(x: int, mod: int) -> int:
    """Residue in ``1..mod``."""
    r = x % mod
    return r if r else mod


def standard_factorization(k: int) -> list[frozenset[Edge]]:
    """Factors ``F_1..F_{6k-1}`` (list index ``i-1``) of K_{6k}."""
    if k < 1:
        raise DesignError("k must be >= 1")
    mod = 6 * k - 1
    out = []
    for i in range(1, mod + 1):
        f = {edge(i, INF)}
        for j in range(1, 3 * k):
            f.add(edge(_res(i - j, mod), _res(i + j, mod)))
        out.append(frozenset(f))
    return out


def classify_edge_factor(e: Edge, k: int) -> int:
    """Index ``i`` of the standard factor containing edge ``e``."""
    mod = 6 * k - 1
    u, v = edge(*e)
    if u == INF:
        return v
    # u + v = 2i (mod 6k-1); 2 is invertible since the modulus is odd
    half = (mod + 1) // 2
    return _res((u + v) * half, mod)


# Gadgets: each is (path of 4 vertices in order, single edge).
Gadget = tuple[tuple[int, int, int, int], tuple[int, int]]

W_GADGET: Gadget = ((1, 3, 5, INF), (2, 4))


def _a_gadget(m: int) -> Gadget:
    return (m, m + 2, m + 4, m + 6), (m + 1, m + 3)


def _b_gadget(m: int) -> Gadget:
    return (m + 5, m + 7, m + 9, m + 11), (m + 8, m + 10)


def _c_gadget(m: int) -> Gadget:
    # edges (m,m+1),(m,m+2),(m+2,m+4) form the path m+1 - m - m+2 - m+4
    return (m + 1, m, m + 2, m + 4), (m + 3, m + 5)


def _d_gadget(m: int) -> Gadget:
    # edges (m,m+2),(m+1,m+2),(m+1,m+3) form the path m - m+2 - m+1 - m+3
    return (m, m + 2, m + 1, m + 3), (m + 4, m + 5)


def zk_gadgets(k: int) -> list[Gadget]:
    """The ``Z_k`` components in group order ``j = 0..k-1``."""
    if k < 1:
        raise DesignError("k must be >= 1")
    gadgets = [W_GADGET]
    if k % 2:
        # each A/B pair spans 12 consecutive labels, so m advances by 12
        for m in range(6, 6 * (k - 2) + 1, 12):
            gadgets += [_a_gadget(m), _b_gadget(m)]
    else:
        for m in range(6, 3 * k + 1, 6):
            gadgets.append(_c_gadget(m))
        for m in range(3 * k + 6, 6 * (k - 1) + 1, 6):
            gadgets.append(_d_gadget(m))
    return gadgets


def gadget_edges(g: Gadget) -> list[Edge]:
    (p1, p2, p3, p4), (s1, s2) = g
    return [edge(p1, p2), edge(p2, p3), edge(p3, p4), edge(s1, s2)]


def build_zk(k: int) -> frozenset[Edge]:
    return frozenset(e for g in zk_gadgets(k) for e in gadget_edges(g))


@dataclass(frozen=True)
class LemmaPartition:
    """Factors, near-factors and leave matching of ``K_{6k}``.

    ``factors[t]`` is ``F_{t+1}``; the last one is the factor built from
    ``Z_k`` minus its middle.  ``near_factors[t]`` is ``E_{t+1}`` and
    ``uncovered[t]`` is the edge deleted from its host factor.  ``labeling[t]``
    is the concrete vertex carrying abstract label ``a_{t+1}``.
    """

    k: int
    factors: tuple[frozenset[Edge], ...]
    near_factors: tuple[frozenset[Edge], ...]
    uncovered: tuple[Edge, ...]
    leave: frozenset[Edge]
    labeling: tuple[int, ...]
    kept_indices: tuple[int, ...] = ()

    @property
    def n_vertices(self) -> int:
        return 6 * self.k

    def vertices(self) -> list[int]:
        return [INF] + list(range(1, 6 * self.k))

    def abstract(self) -> dict[int, int]:
        """Concrete vertex -> 0-based abstract label index."""
        return {v: t for t, v in enumerate(self.labeling)}


def lemma_part_partition(k: int) -> LemmaPartition:
    std = standard_factorization(k)
    gadgets = zk_gadgets(k)
    labeling: list[int] = []
    uncovered: list[Edge] = []
    for (p1, p2, p3, p4), (s1, s2) in gadgets:
        labeling += [p1, p2, p3, p4, s1, s2]
        # deletion order: middle, single edge, first path edge, last path edge
        uncovered += [edge(p2, p3), edge(s1, s2), edge(p1, p2), edge(p3, p4)]

    host: dict[int, Edge] = {}
    for e in uncovered:
        i = classify_edge_factor(e, k)
        if i in host:
            raise DesignError(f"edges {host[i]} and {e} both lie in F_{i}")
        if e not in std[i - 1]:
            raise DesignError(f"edge {e} not found in its computed factor F_{i}")
        host[i] = e
    near = [std[classify_edge_factor(e, k) - 1] - {e} for e in uncovered]
    kept = [i for i in range(1, 6 * k) if i not in host]
    middle = frozenset(uncovered[4 * j] for j in range(k))
    fstar = frozenset(build_zk(k) - middle)
    factors = [std[i - 1] for i in kept] + [fstar]
    return LemmaPartition(
        k=k,
        factors=tuple(factors),
        near_factors=tuple(near),
        uncovered=tuple(uncovered),
        leave=middle,
        labeling=tuple(labeling),
        kept_indices=tuple(kept),
    )


@dataclass
class LemmaReport:
    partition_ok: bool
    matchings_ok: bool
    hk_ok: bool
    middle_ok: bool
    problems: list[str]

    @property
    def ok(self) -> bool:
        return self.partition_ok and self.matchings_ok and self.hk_ok and self.middle_ok

    def __bool__(self) -> bool:
        return self.ok


def _missed(matching: frozenset[Edge], vertices: set[int]) -> set[int] | None:
    """Vertices missed by ``matching``, or None if it is not a matching."""
    seen: set[int] = set()
    for u, v in matching:
        if u in seen or v in seen or u == v:
            return None
        seen.update((u, v))
    return vertices - seen


def _components(edges: list[Edge]) -> list[list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    comps = []
    for s in sorted(adj):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def verify_lemma_part(lp: LemmaPartition) -> LemmaReport:
    k = lp.k
    verts = set(lp.vertices())
    problems: list[str] = []

    owner: dict[Edge, str] = {}
    partition_ok = True
    named = ([(f"F{t + 1}", f) for t, f in enumerate(lp.factors)]
             + [(f"E{t + 1}", e) for t, e in enumerate(lp.near_factors)]
             + [("T", lp.leave)])
    for name, m in named:
        for e in m:
            e = edge(*e)
            if e[0] not in verts or e[1] not in verts or e[0] == e[1]:
                partition_ok = False
                problems.append(f"{name}: bad edge {e}")
            elif e in owner:
                partition_ok = False
                problems.append(f"pair {e} covered by {owner[e]} and {name}")
            else:
                owner[e] = name
    for e in combinations(sorted(verts), 2):
        if e not in owner:
            partition_ok = False
            problems.append(f"pair {e} uncovered")
            break

    matchings_ok = len(lp.factors) == 2 * k and len(lp.near_factors) == 4 * k
    if not matchings_ok:
        problems.append(f"{len(lp.factors)} factors, {len(lp.near_factors)} near-factors")
    for t, f in enumerate(lp.factors):
        if _missed(f, verts) != set():
            matchings_ok = False
            problems.append(f"F{t + 1} is not a perfect matching")
    for t, e in enumerate(lp.near_factors):
        miss = _missed(e, verts)
        if miss is None or len(miss) != 2:
            matchings_ok = False
            problems.append(f"E{t + 1} does not miss exactly two vertices")
        elif t < len(lp.uncovered) and miss != set(lp.uncovered[t]):
            matchings_ok = False
            problems.append(f"E{t + 1} misses {sorted(miss)}, recorded {lp.uncovered[t]}")

    hk_ok = True
    holes: list[Edge] = []
    for t, e in enumerate(lp.near_factors):
        miss = _missed(e, verts)
        if miss and len(miss) == 2:
            holes.append(edge(*miss))
    comps = _components(holes)
    deg: dict[int, int] = {}
    for u, v in holes:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    paths = singles = 0
    for comp in comps:
        ne = sum(1 for u, v in holes if u in comp)
        ds = sorted(deg[x] for x in comp)
        if len(comp) == 4 and ne == 3 and ds == [1, 1, 2, 2]:
            paths += 1
        elif len(comp) == 2 and ne == 1:
            singles += 1
        else:
            hk_ok = False
    if len(set(holes)) != 4 * k or paths != k or singles != k or len(verts - set(deg)):
        hk_ok = False
    if not hk_ok:
        problems.append(f"uncovered pairs form {paths} paths and {singles} single edges, "
                        f"not H_{k}")

    middle_ok = True
    lab = lp.labeling
    if sorted(lab) != sorted(verts):
        middle_ok = False
        problems.append("labeling is not a bijection onto the vertices")
    else:
        hole_set = set(holes)
        image = set()
        for j in range(k):
            a = lab[6 * j: 6 * j + 6]
            want = [edge(a[0], a[1]), edge(a[1], a[2]), edge(a[2], a[3]), edge(a[4], a[5])]
            if not set(want) <= hole_set:
                middle_ok = False
                problems.append(f"group {j}: labeling does not map H_k edges onto uncovered pairs")
            image.add(edge(a[1], a[2]))
        if image != set(lp.leave):
            middle_ok = False
            problems.append("T is not the image of the middle of H_k")
    return LemmaReport(partition_ok, matchings_ok, hk_ok, middle_ok, problems)


def _fmt_v(v: int) -> str:
    return "inf" if v == INF else str(v)


def _fmt_matching(m) -> str:
    return " ".join(f"{_fmt_v(u)}-{_fmt_v(v)}" for u, v in sorted(edge(*e) for e in m))


def dump_partition(lp: LemmaPartition) -> str:
    """Line-oriented debug dump of a partition."""
    lines = [f"F{t + 1}: {_fmt_matching(f)}" for t, f in enumerate(lp.factors)]
    lines += [f"E{t + 1}: {_fmt_matching(e)}" for t, e in enumerate(lp.near_factors)]
    lines.append(f"T: {_fmt_matching(lp.leave)}")
    lines.append("labeling: " + " ".join(f"a{t + 1}={_fmt_v(v)}" for t, v in enumerate(lp.labeling)))
    return "\n".join(lines) + "\n"
