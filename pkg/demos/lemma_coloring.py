"""Color blocks by the first part they avoid and look at the components."""

from crossfree import (
    FANO,
    CrossFreePartition,
    NotCrossFreeError,
    color_components,
    construct_cross_free_sts,
    lemma_gn_coloring,
)

c = construct_cross_free_sts(2)
coloring = lemma_gn_coloring(c.ts, c.partition)
rep = color_components(c.ts, coloring)

# one big component per color, missing exactly one part
for col, sizes in enumerate(rep.profile()):
    print(f"color {col}: sizes {sizes}")
print("largest:", rep.largest, "= n - 6k =", c.n - 6 * 2)

# the Fano plane has no cross-free set of singletons {0}, {1}, {3}
try:
    lemma_gn_coloring(FANO, CrossFreePartition([[0], [1], [3]]))
except NotCrossFreeError as e:
    print("rejected, block", e.block, "is transversal")
