"""
Alon-Tarsi numbers
==================

Eulerian subdigraph counts, graph polynomial coefficients and the exact
AT number with a checkable certificate.
"""

from atgraph import (Orientation, at_exact, at_lower_bound, at_upper_bound, cycle,
                     eulerian_diff, f_sum, monomial_coefficient, path, theta,
                     verify_certificate)

# a directed 4-cycle: the empty set and the whole cycle are both even
c4 = cycle(4)
d = Orientation.from_arcs(c4, [(0, 1), (1, 2), (2, 3), (3, 0)])
r = eulerian_diff(d)
print(f"directed C4: even={r.even} odd={r.odd}")

# the coefficient of the outdegree monomial has the same magnitude
print("coefficient of x0 x1 x2 x3:", monomial_coefficient(c4, d.outdeg))

###############################################################################
# Bounds first, search only when they disagree.

for name, g in [("C5", cycle(5)), ("theta(2,2,4)", theta(2, 2, 4)),
                ("P3 +T P2", f_sum(path(3), path(2), "T"))]:
    k, cert = at_exact(g)
    print(f"{name:<14} lower={at_lower_bound(g)} upper={at_upper_bound(g).k} "
          f"AT={k} via {cert.method}, certificate ok: {verify_certificate(g, cert)}")

###############################################################################
# The large coefficient on P4 +T P4 with every exponent equal to 2.

g = f_sum(path(4), path(4), "T")
print(f"P4 +T P4 ({g.n} vertices, {g.m} edges):", monomial_coefficient(g, [2] * g.n))
