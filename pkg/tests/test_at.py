import itertools
import random

import pytest

import oracles
from atgraph import (Certificate, Graph, Orientation, SearchStats, at_exact, at_lower_bound,
                     at_orientation_by_coefficient, at_upper_bound, bipartite_at, complete,
                     cycle, eulerian_diff, f_sum, find_at_orientation, find_nonzero_monomial,
                     make_certificate, monomial_coefficient, orient_by_order, path,
                     realize_outdegrees, s_sum_orientation, star, subdivision,
                     subdivision_orientation, theta, verify_certificate)
from atgraph.errors import (BudgetExceeded, EdgeSetMismatch, HashMismatch, NotAPermutation,
                            NotATOrientation, NotBipartite, TargetMismatch, TooManyEdges)
from conftest import random_graph_max_edges


def directed_cycle(n):
    g = cycle(n)
    return Orientation.from_arcs(g, [(i, (i + 1) % n) for i in range(n)])


def random_orientation(rng, g):
    return Orientation(g, tuple((u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edges))


# ---------------------------------------------------------------------------
# diff
# ---------------------------------------------------------------------------

def test_acyclic_diff_is_one():
    r = eulerian_diff(orient_by_order(complete(5), range(5)))
    assert (r.even, r.odd, r.diff) == (1, 0, 1)


def test_directed_even_cycle():
    r = eulerian_diff(directed_cycle(6))
    assert (r.even, r.odd, r.diff) == (2, 0, 2)


def test_directed_odd_cycle():
    r = eulerian_diff(directed_cycle(5))
    assert (r.even, r.odd, r.diff) == (1, 1, 0)


def test_edgeless_diff():
    assert eulerian_diff(Orientation(Graph.from_edges(2, []), ())).diff == 1


def test_diff_edge_limit():
    with pytest.raises(TooManyEdges):
        eulerian_diff(orient_by_order(complete(6), range(6)), limit=10)


def test_diff_matches_enumeration(rng):
    for _ in range(150):
        g = random_graph_max_edges(rng, rng.randint(2, 7), 10)
        d = random_orientation(rng, g)
        r = eulerian_diff(d)
        assert (r.even, r.odd) == oracles.eulerian_counts(d.arcs, g.n)


def test_diff_memo_agrees_with_plain(rng):
    for _ in range(40):
        g = random_graph_max_edges(rng, rng.randint(3, 8), 14)
        d = random_orientation(rng, g)
        assert eulerian_diff(d, memo=True) == eulerian_diff(d, memo=False)


def test_diff_independent_of_arc_listing_order(rng):
    g = f_sum(path(2), cycle(3), "S")
    d = random_orientation(rng, g)
    shuffled = list(d.arcs)
    rng.shuffle(shuffled)
    assert eulerian_diff(Orientation.from_arcs(g, shuffled)) == eulerian_diff(d)


def test_reversal_preserves_magnitude(rng):
    for _ in range(40):
        g = random_graph_max_edges(rng, rng.randint(3, 7), 12)
        d = random_orientation(rng, g)
        assert abs(eulerian_diff(d.reversed()).diff) == abs(eulerian_diff(d).diff)


# ---------------------------------------------------------------------------
# coefficients
# ---------------------------------------------------------------------------

def test_single_edge_coefficients():
    g = path(2)
    assert monomial_coefficient(g, [1, 0]) == 1
    assert monomial_coefficient(g, [0, 1]) == -1


def test_c4_all_ones_frozen():
    assert monomial_coefficient(cycle(4), [1, 1, 1, 1]) == -2


def test_coefficient_matches_expansion(rng):
    for _ in range(60):
        g = random_graph_max_edges(rng, rng.randint(2, 6), 9)
        d = random_orientation(rng, g)
        t = d.outdeg
        assert monomial_coefficient(g, t) == oracles.expand_coefficient(g.n, g.edges, t)


def test_coefficient_magnitude_equals_diff(rng):
    for _ in range(100):
        g = random_graph_max_edges(rng, rng.randint(2, 8), 8)
        d = random_orientation(rng, g)
        assert abs(monomial_coefficient(g, d.outdeg)) == abs(eulerian_diff(d).diff)


def test_coefficient_memo_agrees(rng):
    for _ in range(30):
        g = random_graph_max_edges(rng, rng.randint(3, 8), 13)
        t = random_orientation(rng, g).outdeg
        assert monomial_coefficient(g, t, memo=True) == monomial_coefficient(g, t, memo=False)


def test_coefficient_target_checks():
    with pytest.raises(TargetMismatch):
        monomial_coefficient(cycle(4), [1, 1, 1])
    with pytest.raises(TargetMismatch):
        monomial_coefficient(cycle(4), [1, 1, 1, 2])
    assert monomial_coefficient(path(3), [0, 0, 2]) == 0


def test_complete_graph_coefficient():
    # K3 polynomial has the monomial x0^2 x1 with coefficient 1 (Vandermonde)
    assert abs(monomial_coefficient(complete(3), [2, 1, 0])) == 1
    assert monomial_coefficient(complete(3), [1, 1, 1]) == 0


# ---------------------------------------------------------------------------
# orientations and certificates
# ---------------------------------------------------------------------------

def test_orient_by_order():
    d = orient_by_order(path(3), [2, 1, 0])
    assert d.arcs == ((0, 1), (1, 2))
    with pytest.raises(NotAPermutation):
        orient_by_order(path(3), [0, 0, 1])


def test_from_arcs_rejects():
    with pytest.raises(EdgeSetMismatch):
        Orientation.from_arcs(path(3), [(0, 1)])
    with pytest.raises(EdgeSetMismatch):
        Orientation.from_arcs(path(3), [(0, 1), (0, 2)])
    with pytest.raises(EdgeSetMismatch):
        Orientation.from_arcs(path(3), [(0, 1), (1, 0), (1, 2)])


def test_realize_outdegrees(rng):
    for _ in range(40):
        g = random_graph_max_edges(rng, rng.randint(2, 8), 12)
        d = random_orientation(rng, g)
        r = realize_outdegrees(g, d.outdeg)
        assert r is not None and r.outdeg == d.outdeg
    assert realize_outdegrees(cycle(3), [3, 0, 0]) is None
    assert realize_outdegrees(cycle(3), [2, 0, 0]) is None


def test_certificate_round_trip():
    c = at_upper_bound(complete(4))
    assert Certificate.from_json(c.to_json()) == c
    assert (c.k, c.diff, c.method) == (4, 1, "degeneracy-order")


def test_verify_accepts_and_rejects():
    g = cycle(4)
    c = make_certificate(directed_cycle(4), "search")
    assert c.diff == 2 and c.k == 2
    assert verify_certificate(g, c)
    flipped = list(c.arcs)
    flipped[0] = flipped[0][::-1]
    bad = Certificate(c.graph_sha, c.k, tuple(flipped), c.diff, c.method)
    assert not verify_certificate(g, bad)


def test_verify_odd_cycle_claim_of_two_fails():
    d = directed_cycle(5)
    c = Certificate(make_certificate(d, "search").graph_sha, 2, d.arcs, None, "search")
    assert not verify_certificate(cycle(5), c)


def test_verify_other_graph():
    c = at_upper_bound(cycle(4))
    with pytest.raises(HashMismatch):
        verify_certificate(cycle(5), c)


def test_verify_wrong_diff_claim():
    c = make_certificate(directed_cycle(4), "search")
    assert not verify_certificate(cycle(4), Certificate(c.graph_sha, 2, c.arcs, 1, "search"))


# ---------------------------------------------------------------------------
# AT numbers
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("g, expected", [
    (complete(4), 4), (cycle(5), 3), (theta(2, 2, 2), 3), (cycle(6), 2),
    (path(1), 1), (path(4), 2), (star(4), 2), (complete(3), 3),
])
def test_at_exact_frozen(g, expected):
    k, cert = at_exact(g)
    assert k == expected
    assert verify_certificate(g, cert)


def test_at_exact_matches_brute_force(rng):
    for _ in range(40):
        g = random_graph_max_edges(rng, rng.randint(2, 6), 8)
        k, cert = at_exact(g)
        assert k == oracles.alon_tarsi(g.n, g.edges)
        assert cert.k == k and verify_certificate(g, cert)


def test_bounds_bracket_at(rng):
    for _ in range(40):
        g = random_graph_max_edges(rng, rng.randint(2, 8), 12)
        k, _ = at_exact(g)
        assert at_lower_bound(g) <= k <= at_upper_bound(g).k


def test_bipartite_at(rng):
    assert bipartite_at(cycle(6)) == 2
    assert bipartite_at(complete(2)) == 2
    g = f_sum(path(3), path(3), "S")
    assert bipartite_at(g) == at_exact(g)[0]
    with pytest.raises(NotBipartite):
        bipartite_at(cycle(5))


def test_search_budget():
    g = f_sum(path(3), path(2), "T")
    with pytest.raises(BudgetExceeded) as info:
        at_exact(g, budget=1)
    assert (info.value.lower, info.value.upper) == (3, 4)


def test_search_stats():
    stats = SearchStats()
    d = find_at_orientation(cycle(5), 3, stats=stats)
    assert d is not None and d.max_outdeg <= 2
    assert stats.expanded > 0
    assert find_at_orientation(cycle(5), 2) is None


def test_polynomial_route_agrees_with_orientation_route():
    for g in (cycle(5), cycle(4), theta(2, 2, 2), complete(4)):
        k, _ = at_exact(g)
        assert find_nonzero_monomial(g, k - 1) is None
        cert = at_orientation_by_coefficient(g, k)
        assert cert is not None and verify_certificate(g, cert)


def test_subdivision_orientation():
    for n in (3, 4, 5):
        c = subdivision_orientation(complete(n))
        assert (c.k, c.diff) == (3, 1)
        assert verify_certificate(subdivision(complete(n)), c)


def test_s_sum_orientation():
    h = cycle(3)
    _, ch = at_exact(h)
    c = s_sum_orientation(path(2), h, ch.orientation(h))
    g = f_sum(path(2), h, "S")
    assert c.k == 3 and c.diff != 0
    assert verify_certificate(g, c)


def test_s_sum_orientation_rejects_zero_diff():
    with pytest.raises(NotATOrientation):
        s_sum_orientation(path(2), cycle(3), directed_cycle(3))


def test_s_sum_orientation_unverified_beyond_limit():
    h = complete(4)
    _, ch = at_exact(h)
    c = s_sum_orientation(path(3), h, ch.orientation(h), limit=10)
    assert c.diff is None and not c.verified


def test_all_orientations_of_small_graph(rng):
    # every orientation of K4: |coeff(outdeg)| == |diff|
    g = complete(4)
    for arcs in itertools.islice(oracles.orientations(list(g.edges)), 64):
        d = Orientation(g, tuple(arcs))
        assert abs(monomial_coefficient(g, d.outdeg)) == abs(eulerian_diff(d).diff)
