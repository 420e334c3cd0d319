"""Affine-plane colorings with q+1 colors and their products with a triple."""

from crossfree import color_components, iterated_product_coloring, plane_substitution_coloring
from crossfree.design import lower_bound

# STS(9) as AG(2,3): color a block by the direction of its line
cs = plane_substitution_coloring(3)
print(cs.ts.blocks)
print(cs.coloring.colors)
print(color_components(cs.ts, cs.coloring).profile())

# every component has q points, matching ceil(n / (r - 1))
for q in (3, 7, 9, 13):
    cs = plane_substitution_coloring(q)
    rep = color_components(cs.ts, cs.coloring)
    print(q, cs.ts.n, cs.coloring.r, rep.largest, lower_bound(cs.ts.n, cs.coloring.r))

# multiplying by a triple scales components by 3
for t in range(4):
    cs = iterated_product_coloring(3, t)
    print(t, cs.ts.n, color_components(cs.ts, cs.coloring).profile()[0])
