"""Classical STS constructions and r-colorings with small monochromatic components.

The affine-plane coloring substitutes a copy of STS(q) on every line of
AG(2, q) and colors each block by the parallel class of its line, so every
monochromatic component is a single line of q points.  Products with the
3-point system keep that shape while tripling n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .design import (
    BlockColoring,
    DesignError,
    TripleSystem,
    color_components,
    validate_sts,
)
from .fields import field_table


def bose_sts(n: int) -> TripleSystem:
    """Bose construction, n = 6k+3, points ``(x, level) -> 3x + level``."""
    if n % 6 != 3:
        raise DesignError(f"Bose construction needs n = 3 (mod 6), got {n}")
    v = n // 3
    half = (v + 1) // 2

    def pt(x: int, i: int) -> int:
        return 3 * x + i % 3

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(v)]
    for x in range(v):
        for y in range(x + 1, v):
            z = ((x + y) * half) % v
            for i in range(3):
                blocks.append((pt(x, i), pt(y, i), pt(z, i + 1)))
    return TripleSystem(n, blocks)


def skolem_sts(n: int) -> TripleSystem:
    """Skolem construction, n = 6k+1; the extra point is ``n - 1``."""
    if n % 6 != 1:
        raise DesignError(f"Skolem construction needs n = 1 (mod 6), got {n}")
    v = (n - 1) // 3  # 2k
    h = v // 2
    inf = n - 1

    def op(x: int, y: int) -> int:
        # half-idempotent commutative quasigroup: Z_v addition, symbols renamed
        s = (x + y) % v
        return s // 2 if s % 2 == 0 else h + (s - 1) // 2

    def pt(x: int, i: int) -> int:
        return 3 * x + i % 3

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(h)]
    for x in range(h):
        for i in range(3):
            blocks.append((inf, pt(h + x, i), pt(x, i + 1)))
    for x in range(v):
        for y in range(x + 1, v):
            for i in range(3):
                blocks.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return TripleSystem(n, blocks)


def small_sts(n: int) -> TripleSystem:
    """Any STS(n), chosen by residue."""
    if n % 6 == 3:
        return bose_sts(n)
    if n % 6 == 1:
        return skolem_sts(n)
    raise DesignError(f"no STS({n}): n must be 1 or 3 (mod 6)")


@dataclass(frozen=True)
class AffinePlane:
    """AG(2, q); point ``(x, y)`` is ``x*q + y``, each line a sorted point tuple."""

    q: int
    parallel_classes: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def points(self) -> range:
        return range(self.q * self.q)

    @property
    def lines(self) -> list[tuple[int, ...]]:
        return [line for cls in self.parallel_classes for line in cls]


def affine_plane(q: int) -> AffinePlane:
    F = field_table(q)
    classes = []
    for a in range(q):
        cls = []
        for b in range(q):
            # y = a*x + b
            cls.append(tuple(sorted(x * q + int(F.add[F.mul[a, x], b]) for x in range(q))))
        classes.append(tuple(sorted(cls)))
    classes.append(tuple(tuple(c * q + y for y in range(q)) for c in range(q)))
    return AffinePlane(q, tuple(classes))


@dataclass(frozen=True)
class ColoredSTS:
    ts: TripleSystem
    coloring: BlockColoring
    profile: tuple[tuple[int, ...], ...]

    def check(self) -> bool:
        """Recompute the component profile and compare with the stored one."""
        got = color_components(self.ts, self.coloring).profile()
        return tuple(tuple(p) for p in got) == self.profile


def _colored(ts: TripleSystem, color_of: dict, r: int, expected) -> ColoredSTS:
    coloring = BlockColoring(r, [color_of[b] for b in ts.blocks])
    return ColoredSTS(ts, coloring, tuple(tuple(p) for p in expected))


def plane_substitution_coloring(q: int) -> ColoredSTS:
    """STS(q^2) with q+1 colors, every monochromatic component of size q."""
    if q % 6 not in (1, 3):
        raise DesignError(f"no STS({q}) to substitute: q must be 1 or 3 (mod 6)")
    plane = affine_plane(q)
    inner = small_sts(q)
    color_of = {}
    for c, cls in enumerate(plane.parallel_classes):
        for line in cls:
            for b in inner.blocks:
                color_of[tuple(sorted(line[x] for x in b))] = c
    ts = TripleSystem(q * q, color_of)
    return _colored(ts, color_of, q + 1, [[q] * q] * (q + 1))


def direct_product(ts1: TripleSystem, ts2: TripleSystem) -> TripleSystem:
    """STS(n1*n2) on pairs ``(a, x) -> a*n2 + x``."""
    for t in (ts1, ts2):
        rep = validate_sts(t)
        if not rep.ok:
            raise DesignError(f"product input is not an STS: {rep.violation}")
    n2 = ts2.n

    def pt(a: int, x: int) -> int:
        return a * n2 + x

    blocks = []
    for a, b, c in ts1.blocks:
        for x in range(n2):
            blocks.append((pt(a, x), pt(b, x), pt(c, x)))
    for a in range(ts1.n):
        for x, y, z in ts2.blocks:
            blocks.append((pt(a, x), pt(a, y), pt(a, z)))
    sigmas = ((0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2))
    for A in ts1.blocks:
        for X in ts2.blocks:
            for s in sigmas:
                blocks.append(tuple(pt(A[i], X[s[i]]) for i in range(3)))
    return TripleSystem(ts1.n * n2, blocks)


TRIPLE = TripleSystem(3, [(0, 1, 2)])


def product_with_triple(cs: ColoredSTS) -> ColoredSTS:
    """Color ``cs.ts x T`` so every component C becomes C x T."""
    ts, coloring = cs.ts, cs.coloring
    rep = color_components(ts, coloring)
    # fiber {p} x T goes to the smallest color with a nontrivial component at p
    fiber_color = [None] * ts.n
    for col in range(coloring.r):
        for comp in rep.nontrivial(col):
            for p in comp:
                if fiber_color[p] is None:
                    fiber_color[p] = col
    prod = direct_product(ts, TRIPLE)
    color_of = {}
    for b, col in zip(ts.blocks, coloring.colors):
        a0, a1, a2 = b
        for x in range(3):
            color_of[(3 * a0 + x, 3 * a1 + x, 3 * a2 + x)] = col
    for p in range(ts.n):
        col = fiber_color[p]
        if col is None:
            raise DesignError(f"point {p} lies in no nontrivial component")
        color_of[(3 * p, 3 * p + 1, 3 * p + 2)] = col
    # remaining blocks come from (block of ts) x T and inherit its color
    base_color = dict(zip(ts.blocks, coloring.colors))
    for blk in prod.blocks:
        if blk not in color_of:
            color_of[blk] = base_color[tuple(sorted(x // 3 for x in blk))]
    expected = [[3 * s for s in sizes] for sizes in rep.profile()]
    return _colored(prod, color_of, coloring.r, expected)


def iterated_product_coloring(q: int, t: int) -> ColoredSTS:
    """STS(3^t q^2), q+1 colors, each color: q components of size 3^t q."""
    if t < 0:
        raise DesignError("t must be >= 0")
    cs = plane_substitution_coloring(q)
    for _ in range(t):
        cs = product_with_triple(cs)
    return cs
