"""Walk through the STS(18k+3) construction for k = 1 and check it."""

from crossfree import construct_cross_free_sts, transversal_blocks, validate_sts
from crossfree.factorization import dump_partition

k = 1
c = construct_cross_free_sts(k)

# the near-factor partition of K_6 that drives everything
print(dump_partition(c.labeling))

# 21 points, 70 blocks, three parts of size 6
print(f"STS({c.n}) with {len(c.ts)} blocks")
print("valid:", validate_sts(c.ts).ok)
for i, part in enumerate(c.partition.parts):
    print(f"X{i}:", sorted(part))

# no block meets all three parts
print("transversal blocks:", transversal_blocks(c.ts, c.partition))
print("leave graph factored by search:", c.fallback)

# larger k work the same way
for k in (2, 5, 10):
    c = construct_cross_free_sts(k)
    print(k, c.n, len(c.ts), c.partition.m, validate_sts(c.ts).ok)
