"""
Operation graphs and F-sums
===========================

Build S, R, Q and T of a small path, then glue copies together along a
second graph with the four F-sums.
"""

from atgraph import f_sum, f_sum_via_product, path, cycle, apply_op
from atgraph.io import emit_dot

g = path(4)
for op in "SRQT":
    fg = apply_op(g, op)
    print(f"{op}(P4): {fg.n} vertices, {fg.m} edges")

# originals keep 0..n-1, the vertex on the i-th edge sits at n + i
print(apply_op(g, "S").labels)

###############################################################################
# An F-sum stacks one copy of F(G) per vertex of H and joins matching
# original vertices along the edges of H.  Edge-vertices are never joined.

s = f_sum(cycle(3), path(2), "S")
print(f"C3 +S P2: {s.n} vertices, {s.m} edges")

# the same graph, built as a Cartesian product with some edges deleted
assert s == f_sum_via_product(cycle(3), path(2), "S")

###############################################################################
# DOT output for Graphviz; edge-vertices are drawn as boxes.

print(emit_dot(apply_op(path(3), "T"), name="T_P3"))
