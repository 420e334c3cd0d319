"""Brute-force oracles: f(7), f(9), small enumerations and cross-free search."""

import time

from crossfree import construct_cross_free_sts, cross_free_search, enumerate_sts, exhaustive_f

for n in (7, 9):
    (ts,) = enumerate_sts(n)
    t0 = time.perf_counter()
    res = exhaustive_f(ts)
    print(f"f({n}) = {res.value}, {res.explored} nodes, {time.perf_counter() - t0:.2f}s")
    print("  witness:", res.witness.colors)

# four colors on STS(9)
print("STS(9), r=4:", exhaustive_f(enumerate_sts(9)[0], r=4).value)

# two classes of STS(13), takes a few seconds
print("STS(13) classes:", len(enumerate_sts(13)))

# the k = 1 construction is optimal
ts = construct_cross_free_sts(1).ts
for m in (6, 7):
    res = cross_free_search(ts, m)
    print(f"cross-free size {m}:", "found" if res.witness else "none", f"({res.explored} nodes)")
