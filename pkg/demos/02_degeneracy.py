"""
Degeneracy of F-sums
====================

Peel vertices of minimum degree and compare the measured degeneracy of
each F-sum with the general upper bounds.
"""

from atgraph import complete, cycle, degeneracy, elimination_order, f_sum, path, star
from atgraph.repro import degeneracy_bound

d, order = elimination_order(cycle(5))
print("C5 degeneracy", d, "peel order", order)

bases = {"P4": path(4), "C5": cycle(5), "Star4": star(4), "K4": complete(4)}
partners = {"P3": path(3), "C4": cycle(4), "K4": complete(4)}

for kind in "SRQT":
    print(f"\n{kind}-sums (measured / bound)")
    for gname, g in bases.items():
        cells = []
        for hname, h in partners.items():
            s = f_sum(g, h, kind)
            cells.append(f"{hname}: {degeneracy(s)}/{degeneracy_bound(kind, g, h)}")
        print(f"  {gname:<6}", "  ".join(cells))
