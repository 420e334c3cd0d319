"""Brute-force oracles for tiny systems.

Everything here is deliberately independent of the constructions: values
come from exhaustive enumeration, with budgets that fail loudly instead of
truncating.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

from .design import (
    BlockColoring,
    CrossFreePartition,
    DesignError,
    TripleSystem,
    color_components,
    validate_sts,
)


class BudgetExceeded(RuntimeError):
    def __init__(self, needed, budget):
        super().__init__(f"search needs about {needed} candidates, budget is {budget}")
        self.needed = needed
        self.budget = budget


@dataclass
class SearchResult:
    value: Any
    witness: Any
    explored: int


def _largest_component(n: int, blocks, colors, r: int) -> int:
    rep = color_components(TripleSystem(n, blocks), BlockColoring(r, colors))
    return rep.largest


def _sweep_f(ts: TripleSystem, r: int) -> SearchResult:
    best, arg, explored = ts.n + 1, None, 0
    for colors in itertools.product(range(r), repeat=len(ts.blocks)):
        explored += 1
        size = _largest_component(ts.n, ts.blocks, colors, r)
        if size < best:
            best, arg = size, colors
    return SearchResult(best, BlockColoring(r, arg), explored)


def exhaustive_f(ts: TripleSystem, r: int = 3, prune: bool = True,
                 budget: int = 3 ** 16) -> SearchResult:
    """Minimum over all block r-colorings of the largest monochromatic component.

    With ``prune`` the colorings are explored depth first with colors
    introduced in first-use order (colorings equal up to renaming colors are
    visited once) and branches whose partial largest component already
    reaches the best value are cut; components only grow as blocks are
    added, so the cut is exact.  Without ``prune`` every one of the
    ``r**b`` colorings is scored from scratch.
    """
    if not validate_sts(ts).ok:
        raise DesignError("exhaustive_f needs a valid STS")
    space = r ** len(ts.blocks)
    if space > budget:
        raise BudgetExceeded(space, budget)
    if not prune:
        return _sweep_f(ts, r)

    n, blocks = ts.n, ts.blocks
    parents = [list(range(n)) for _ in range(r)]
    sizes = [[1] * n for _ in range(r)]
    colors = [0] * len(blocks)
    best = [n + 1, None]
    explored = 0

    def find(par, x):
        while par[x] != x:
            x = par[x]
        return x

    def go(pos: int, used: int, cur: int) -> None:
        nonlocal explored
        explored += 1
        if cur >= best[0]:
            return
        if pos == len(blocks):
            best[0], best[1] = cur, tuple(colors)
            return
        a, b, c = blocks[pos]
        for col in range(min(used + 1, r)):
            par, sz = parents[col], sizes[col]
            # union without path compression so it can be undone
            undo = []
            for x, y in ((a, b), (a, c)):
                rx, ry = find(par, x), find(par, y)
                if rx != ry:
                    if sz[rx] < sz[ry]:
                        rx, ry = ry, rx
                    par[ry] = rx
                    sz[rx] += sz[ry]
                    undo.append((rx, ry))
            size = sz[find(par, a)]
            colors[pos] = col
            go(pos + 1, max(used, col + 1), max(cur, size))
            for rx, ry in reversed(undo):
                par[ry] = ry
                sz[rx] -= sz[ry]

    go(0, 0, 0)
    return SearchResult(best[0], BlockColoring(r, best[1]), explored)


def cross_free_search(ts: TripleSystem, m: int, budget: int = 10 ** 7) -> SearchResult:
    """Find three disjoint m-sets with no block meeting all three, or prove none.

    Points are assigned in order to part 0, 1, 2 or to no part.  Parts are
    opened in order (part i is used only after part i-1), which fixes the
    labelling min X_0 < min X_1 < min X_2.  Whenever two points of a block sit
    in different parts, the third point is barred from the remaining part.
    """
    n = ts.n
    if not validate_sts(ts).ok:
        raise DesignError("cross_free_search needs a valid STS")
    if m < 1 or 3 * m > n:
        return SearchResult(None, None, 0)
    third = ts.block_index()
    spare = n - 3 * m
    assign = [-1] * n  # -1 unassigned, 3 means "no part"
    banned = [[0, 0, 0] for _ in range(n)]  # count of reasons each part is banned
    counts = [0, 0, 0, 0]
    explored = 0
    found: list[CrossFreePartition] = []

    def place(x: int, p: int) -> list[int] | None:
        """Assign x to part p; return the points whose bans were bumped, or None."""
        touched = []
        ok = True
        if p < 3:
            for y in range(n):
                q = assign[y]
                if y == x or q < 0 or q == 3 or q == p:
                    continue
                z = third[(x, y) if x < y else (y, x)]
                other = 3 - p - q
                banned[z][other] += 1
                touched.append((z, other))
                if assign[z] == other:
                    ok = False
        assign[x] = p
        counts[p] += 1
        if not ok:
            unplace(x, p, touched)
            return None
        return touched

    def unplace(x: int, p: int, touched) -> None:
        for z, other in touched:
            banned[z][other] -= 1
        assign[x] = -1
        counts[p] -= 1

    def go(x: int, opened: int) -> bool:
        nonlocal explored
        explored += 1
        if explored > budget:
            raise BudgetExceeded(f"more than {budget}", budget)
        if x == n:
            return counts[0] == counts[1] == counts[2] == m
        # remaining points must still be able to fill the parts
        if sum(m - counts[i] for i in range(3)) > n - x:
            return False
        for p in range(min(opened + 1, 3)):
            if counts[p] == m or banned[x][p]:
                continue
            touched = place(x, p)
            if touched is None:
                continue
            if go(x + 1, max(opened, p + 1)):
                return True
            unplace(x, p, touched)
        if counts[3] < spare:
            place(x, 3)
            if go(x + 1, opened):
                return True
            unplace(x, 3, [])
        return False

    if go(0, 0):
        parts = [[x for x in range(n) if assign[x] == i] for i in range(3)]
        found.append(CrossFreePartition(parts))
    return SearchResult(found[0] if found else None, found[0] if found else None, explored)


def _cycle_type(third: list[list[int]], a: int, b: int) -> tuple[int, ...]:
    """Cycle lengths of the graph joining x to its partners in the blocks through a and b."""
    n = len(third)
    c = third[a][b]
    seen = {a, b, c}
    lengths = []
    for x in range(n):
        if x in seen:
            continue
        length, y, use_a = 0, x, True
        while y not in seen:
            seen.add(y)
            length += 1
            y = third[a][y] if use_a else third[b][y]
            use_a = not use_a
        lengths.append(length)
    return tuple(sorted(lengths))


def _third_table(ts: TripleSystem) -> list[list[int]]:
    n = ts.n
    third = [[-1] * n for _ in range(n)]
    for a, b, c in ts.blocks:
        third[a][b] = third[b][a] = c
        third[a][c] = third[c][a] = b
        third[b][c] = third[c][b] = a
    return third


def _start_list(third: list[list[int]]) -> tuple[tuple[int, ...], list[tuple[int, int, int]]]:
    """Invariantly chosen starts (a, b, d) and the invariant that picked them.

    (a, b) ranges over pairs of least cycle type; d over the points off
    their block minimising the types of (a, d) and (b, d).
    """
    n = len(third)
    types = {}
    for a in range(n):
        for b in range(a + 1, n):
            types[a, b] = types[b, a] = _cycle_type(third, a, b)
    least = min(types.values())
    starts = []
    for (a, b), t in sorted(types.items()):
        if t != least:
            continue
        c = third[a][b]
        keys = {d: (types[a, d], types[b, d]) for d in range(n) if d not in (a, b, c)}
        low = min(keys.values())
        starts += [(a, b, d) for d, key in keys.items() if key == low]
    return least, starts


def _trace(third, a, b, d, ref, exact):
    """Closure trace from start (a, b, d), compared against ``ref``.

    Returns ``None`` when the start is rejected: with ``exact`` on the first
    entry differing from ``ref``, otherwise on the first entry exceeding it
    while still tied.  A start that fails to label every point is rejected.
    """
    n = len(third)
    c = third[a][b]
    label = [-1] * n
    label[a], label[b], label[c], label[d] = 0, 1, 2, 3
    order = [a, b, c, d]
    trace = []
    tied = ref is not None
    i = 1
    while i < len(order):
        oi = order[i]
        for j in range(i):
            z = third[order[j]][oi]
            if label[z] < 0:
                label[z] = len(order)
                order.append(z)
            val = label[z]
            if tied:
                r = ref[len(trace)]
                if val != r:
                    if exact or val > r:
                        return None
                    tied = False
            trace.append(val)
        i += 1
    if len(order) < n:
        return None
    return trace


def canonical_form(ts: TripleSystem) -> tuple[int, ...]:
    """Isomorphism-invariant code for a small STS.

    A labelling starts from an ordered pair (a, b), their third point c and
    a point d off that block, labelled 0..3.  Pairs of labelled points are
    then closed in a fixed order (all (order[j], order[i]) with j < i, i
    increasing), each unlabelled third point taking the next label.  The
    trace is the sequence of third-point labels; it determines the labelled
    system.  The code is the least trace over all starts that generate the
    whole point set, so two systems get equal codes iff they are isomorphic.
    Starts are restricted by pair cycle types (an invariant choice, see
    :func:`_start_list`), and a start is abandoned once its trace exceeds the best prefix.
    """
    if ts.n <= 3:
        return tuple(x for b in ts.blocks for x in b)
    third = _third_table(ts)
    _, starts = _start_list(third)
    best = None
    for a, b, d in starts:
        tr = _trace(third, a, b, d, best, exact=False)
        if tr is not None:
            best = tr
    if best is None:
        raise DesignError("no start generates the whole system")
    return tuple(best)


def _matches_code(third, starts, code) -> bool:
    """True iff some start reproduces ``code`` exactly (equivalently, the codes agree)."""
    return any(_trace(third, a, b, d, code, exact=True) is not None for a, b, d in starts)


def enumerate_sts(n: int, budget: int = 10 ** 7) -> list[TripleSystem]:
    """All STS(n) up to isomorphism, for n in {3, 7, 9, 13}.

    Labelled systems are generated by backtracking over the lowest uncovered
    pair, with the blocks through point 0 fixed as {0, 2i+1, 2i+2} (every
    STS can be relabelled to this), the block through {1, 3} fixed as
    {1, 3, 5} and the block through {1, 4} restricted to {1, 4, 6} or
    {1, 4, 7}.  Each completion is kept only if it is not isomorphic to an
    earlier one, decided by :func:`canonical_form` codes.
    """
    if n not in (3, 7, 9, 13):
        raise DesignError(f"enumeration supports n in 3, 7, 9, 13, not {n}")
    if n == 3:
        return [TripleSystem(3, [(0, 1, 2)])]
    covered = [[False] * n for _ in range(n)]
    blocks: list[tuple[int, int, int]] = []

    def add(b):
        a, c, d = b
        for x, y in ((a, c), (a, d), (c, d)):
            covered[x][y] = covered[y][x] = True
        blocks.append(b)

    def remove(b):
        a, c, d = b
        for x, y in ((a, c), (a, d), (c, d)):
            covered[x][y] = covered[y][x] = False
        blocks.pop()

    for i in range((n - 1) // 2):
        add((0, 2 * i + 1, 2 * i + 2))
    add((1, 3, 5))

    forms: dict[tuple, TripleSystem] = {}
    forms_meta: list[tuple[tuple, tuple]] = []
    explored = 0

    def first_open():
        for x in range(n):
            row = covered[x]
            for y in range(x + 1, n):
                if not row[y]:
                    return x, y
        return None

    def go() -> None:
        nonlocal explored
        explored += 1
        if explored > budget:
            raise BudgetExceeded(f"more than {budget}", budget)
        pair = first_open()
        if pair is None:
            ts = TripleSystem(n, blocks)
            third = _third_table(ts)
            least, starts = _start_list(third)
            for code, rep_least in forms_meta:
                if rep_least == least and _matches_code(third, starts, code):
                    return
            code = canonical_form(ts)
            forms[code] = ts
            forms_meta.append((code, least))
            return
        x, y = pair
        zs = range(y + 1, n)
        if (x, y) == (1, 4):
            # points 7..n-1 are still interchangeable in pairs here
            zs = [z for z in (6, 7) if z < n]
        for z in zs:
            if not covered[x][z] and not covered[y][z]:
                add((x, y, z))
                go()
                remove((x, y, z))

    go()
    return [forms[f] for f in sorted(forms)]
