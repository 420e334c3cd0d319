"""Small finite fields as lookup tables."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# monic irreducible polynomials, low coefficient first, leading 1 omitted
IRREDUCIBLE = {
    4: (2, (1, 1)),          # x^2 + x + 1
    8: (2, (1, 1, 0)),       # x^3 + x + 1
    16: (2, (1, 1, 0, 0)),   # x^4 + x + 1
    9: (3, (1, 0)),          # x^2 + 1
    27: (3, (1, 2, 0)),      # x^3 + 2x + 1
    25: (5, (2, 0)),         # x^2 + 2
    49: (7, (1, 0)),         # x^2 + 1
}


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def supported_orders(limit: int = 100) -> list[int]:
    return sorted([q for q in range(2, limit + 1) if _is_prime(q)] + [q for q in IRREDUCIBLE if q <= limit])


@dataclass(frozen=True)
class FieldTable:
    """GF(q) with elements ``0..q-1``; ``0`` and ``1`` are the field's zero and one."""

    q: int
    p: int
    add: np.ndarray
    mul: np.ndarray

    def neg(self, a: int) -> int:
        return int(np.nonzero(self.add[a] == 0)[0][0])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(np.nonzero(self.mul[a] == 1)[0][0])


def field_table(q: int) -> FieldTable:
    if _is_prime(q):
        r = np.arange(q)
        return FieldTable(q, q, (r[:, None] + r) % q, (r[:, None] * r) % q)
    if q not in IRREDUCIBLE:
        raise ValueError(f"no field table for order {q}")
    p, low = IRREDUCIBLE[q]
    m = len(low)

    # element e <-> coefficient vector of e in base p, low digit first
    def digits(e: int) -> list[int]:
        return [(e // p ** i) % p for i in range(m)]

    def value(ds) -> int:
        return sum(int(d) * p ** i for i, d in enumerate(ds))

    def polymul(a: list[int], b: list[int]) -> list[int]:
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce with x^m = -(low)
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i, lc in enumerate(low):
                    prod[d - m + i] = (prod[d - m + i] - c * lc) % p
        return prod[:m]

    els = [digits(e) for e in range(q)]
    add = np.array([[value([(x + y) % p for x, y in zip(a, b)]) for b in els] for a in els])
    mul = np.array([[value(polymul(a, b)) for b in els] for a in els])
    return FieldTable(q, p, add, mul)
