"""
Alon-Tarsi machinery.

Orientations are stored edge-aligned: ``arcs[i]`` is the direction chosen for
``base.edges[i]``.  Two exact counters live here, both as depth-first
searches over the sorted edge list that memoise on the state of the
"frontier" (vertices already touched and not yet finished):

* :func:`eulerian_diff` counts even and odd Eulerian arc subsets;
* :func:`monomial_coefficient` extracts one coefficient of the graph
  polynomial ``prod_{u<v, uv in E} (x_u - x_v)``.

For any orientation D, ``|coefficient(outdeg(D))| == |diff(D)|``; the tests
check this rather than trusting it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import networkx as nx

from . import io
from .errors import (BudgetExceeded, EdgeSetMismatch, HashMismatch,
                     NotAPermutation, NotATOrientation, NotBipartite,
                     TargetMismatch, TooLarge, TooManyEdges)
from .graph import Graph, is_bipartite
from .structure import chromatic_number, elimination_order, max_density
from .transforms import FSumLayout, f_sum, subdivision

DIFF_EDGE_LIMIT = 64
DEFAULT_BUDGET = 2_000_000


# ---------------------------------------------------------------------------
# Orientation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Orientation:
    base: Graph
    arcs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if len(self.arcs) != self.base.m:
            raise EdgeSetMismatch(f"{len(self.arcs)} arcs for {self.base.m} edges")
        for (u, v), (t, h) in zip(self.base.edges, self.arcs):
            if {t, h} != {u, v}:
                raise EdgeSetMismatch(f"arc ({t}, {h}) does not orient edge ({u}, {v})")

    @classmethod
    def from_arcs(cls, g: Graph, arcs):
        """Build from arcs in any order; every edge must appear exactly once."""
        by_edge = {}
        for t, h in arcs:
            key = (t, h) if t < h else (h, t)
            if key not in g.edge_set:
                raise EdgeSetMismatch(f"arc ({t}, {h}) is not an edge")
            if key in by_edge:
                raise EdgeSetMismatch(f"edge {key} oriented twice")
            by_edge[key] = (t, h)
        if len(by_edge) != g.m:
            raise EdgeSetMismatch(f"{g.m - len(by_edge)} edges left unoriented")
        return cls(g, tuple(by_edge[e] for e in g.edges))

    @property
    def outdeg(self):
        out = [0] * self.base.n
        for t, _ in self.arcs:
            out[t] += 1
        return out

    @property
    def indeg(self):
        inn = [0] * self.base.n
        for _, h in self.arcs:
            inn[h] += 1
        return inn

    @property
    def max_outdeg(self):
        return max(self.outdeg, default=0)

    def reversed(self):
        return Orientation(self.base, tuple((h, t) for t, h in self.arcs))


def orient_by_order(g: Graph, order: Sequence[int]) -> Orientation:
    """Point every edge from the later vertex of ``order`` to the earlier one."""
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise NotAPermutation("order must list every vertex exactly once")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return Orientation(g, tuple((v, u) if pos[u] < pos[v] else (u, v) for u, v in g.edges))


def realize_outdegrees(g: Graph, targets: Sequence[int]) -> Optional[Orientation]:
    """An orientation with exactly the given outdegrees, or ``None``."""
    if sum(targets) != g.m or any(t < 0 for t in targets):
        return None
    net = nx.DiGraph()
    for i, (u, v) in enumerate(g.edges):
        net.add_edge("s", ("e", i), capacity=1)
        net.add_edge(("e", i), ("v", u), capacity=1)
        net.add_edge(("e", i), ("v", v), capacity=1)
    for v in range(g.n):
        net.add_edge(("v", v), "t", capacity=targets[v])
    if g.m == 0:
        return Orientation(g, ())
    value, flow = nx.maximum_flow(net, "s", "t")
    if value != g.m:
        return None
    arcs = []
    for i, (u, v) in enumerate(g.edges):
        tail = u if flow[("e", i)][("v", u)] == 1 else v
        arcs.append((tail, v if tail == u else u))
    return Orientation(g, tuple(arcs))


# ---------------------------------------------------------------------------
# Edge-order frontier bookkeeping shared by both counters
# ---------------------------------------------------------------------------

def _frontier_plan(n, edges):
    """Per edge index: remaining incidences after it, and the live frontier.

    ``rest[i][v]`` for the two endpoints of edge ``i`` counts their incident
    edges with index > i.  ``frontier[i]`` lists vertices touched by edges
    ``< i`` that still have an edge ``>= i``.
    """
    last = [-1] * n
    first = [len(edges)] * n
    for i, (u, v) in enumerate(edges):
        last[u] = last[v] = i
        first[u] = min(first[u], i)
        first[v] = min(first[v], i)
    remaining = [0] * n
    for u, v in edges:
        remaining[u] += 1
        remaining[v] += 1
    rest = []
    for u, v in edges:
        remaining[u] -= 1
        remaining[v] -= 1
        rest.append((remaining[u], remaining[v]))
    frontier = []
    for i in range(len(edges) + 1):
        frontier.append(tuple(v for v in range(n) if first[v] < i <= last[v]))
    return rest, frontier


# ---------------------------------------------------------------------------
# Eulerian subdigraph difference
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiffResult:
    even: int
    odd: int

    @property
    def diff(self):
        return self.even - self.odd


def eulerian_diff(d: Orientation, limit: int = DIFF_EDGE_LIMIT, memo: bool = True) -> DiffResult:
    """Count Eulerian arc subsets of ``d`` by parity.

    Arcs are decided in sorted edge order while tracking ``out - in`` per
    vertex; a branch dies once some vertex's imbalance exceeds the number
    of its arcs still undecided.  With ``memo`` the sub-count is cached on
    the imbalance vector restricted to the frontier, which is all the
    future depends on.
    """
    g = d.base
    if g.m > limit:
        raise TooManyEdges(f"{g.m} arcs exceeds enumeration limit {limit}")
    arcs = d.arcs
    rest, frontier = _frontier_plan(g.n, g.edges)
    bal = [0] * g.n
    m = len(arcs)
    cache = {}

    def rec(i):
        if i == m:
            return 1, 0
        if memo:
            key = (i, tuple(bal[v] for v in frontier[i]))
            hit = cache.get(key)
            if hit is not None:
                return hit
        t, h = arcs[i]
        rt, rh = rest[i] if t < h else rest[i][::-1]
        even = odd = 0
        if abs(bal[t]) <= rt and abs(bal[h]) <= rh:
            e, o = rec(i + 1)
            even += e
            odd += o
        bal[t] += 1
        bal[h] -= 1
        if abs(bal[t]) <= rt and abs(bal[h]) <= rh:
            e, o = rec(i + 1)
            even += o
            odd += e
        bal[t] -= 1
        bal[h] += 1
        if memo:
            cache[key] = (even, odd)
        return even, odd

    even, odd = rec(0)
    return DiffResult(even, odd)


# ---------------------------------------------------------------------------
# Graph polynomial coefficients
# ---------------------------------------------------------------------------

def monomial_coefficient(g: Graph, targets: Sequence[int], memo: bool = True) -> int:
    """Coefficient of ``prod x_v**targets[v]`` in ``prod_{u<v} (x_u - x_v)``.

    Each factor contributes either its smaller endpoint (sign +) or its
    larger endpoint (sign -).  A vertex may not be picked more often than
    its target, nor left with fewer remaining factors than it still needs.
    """
    targets = list(targets)
    if len(targets) != g.n:
        raise TargetMismatch(f"{len(targets)} targets for {g.n} vertices")
    if sum(targets) != g.m:
        raise TargetMismatch(f"targets sum to {sum(targets)}, graph has {g.m} edges")
    degs = g.degrees
    if any(t < 0 or t > d for t, d in zip(targets, degs)):
        return 0
    edges = g.edges
    rest, frontier = _frontier_plan(g.n, edges)
    count = [0] * g.n
    m = len(edges)
    cache = {}

    def ok(v, r):
        return count[v] <= targets[v] and count[v] + r >= targets[v]

    def rec(i):
        if i == m:
            return 1
        if memo:
            key = (i, tuple(count[v] for v in frontier[i]))
            hit = cache.get(key)
            if hit is not None:
                return hit
        u, v = edges[i]
        ru, rv = rest[i]
        total = 0
        count[u] += 1
        if ok(u, ru) and ok(v, rv):
            total += rec(i + 1)
        count[u] -= 1
        count[v] += 1
        if ok(u, ru) and ok(v, rv):
            total -= rec(i + 1)
        count[v] -= 1
        if memo:
            cache[key] = total
        return total

    return rec(0)


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

METHODS = ("degeneracy-order", "search", "s-sum-construction", "subdivision-construction")


@dataclass(frozen=True)
class Certificate:
    graph_sha: str
    k: int
    arcs: Tuple[Tuple[int, int], ...]
    diff: Optional[int]
    method: str
    verified: bool = True

    def to_json_obj(self):
        return {"graph_sha": self.graph_sha, "k": self.k,
                "arcs": [list(a) for a in self.arcs], "diff": self.diff,
                "method": self.method, "verified": self.verified}

    def to_json(self, indent=None):
        return json.dumps(self.to_json_obj(), indent=indent)

    @classmethod
    def from_json_obj(cls, obj):
        return cls(str(obj["graph_sha"]), int(obj["k"]),
                   tuple((int(t), int(h)) for t, h in obj["arcs"]),
                   None if obj.get("diff") is None else int(obj["diff"]),
                   str(obj["method"]), bool(obj.get("verified", True)))

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))

    def orientation(self, g: Graph) -> Orientation:
        return Orientation.from_arcs(g, self.arcs)


def make_certificate(d: Orientation, method: str, k: Optional[int] = None,
                     limit: int = DIFF_EDGE_LIMIT) -> Certificate:
    """Wrap an orientation; ``diff`` is computed when the edge count allows."""
    if k is None:
        k = d.max_outdeg + 1
    if d.base.m <= limit:
        diff, verified = eulerian_diff(d, limit=limit).diff, True
    else:
        diff, verified = None, False
    return Certificate(io.graph_sha(d.base), k, d.arcs, diff, method, verified)


def verify_certificate(g: Graph, c: Certificate, limit: int = DIFF_EDGE_LIMIT) -> bool:
    """Independent re-check of a certificate against ``g``.

    Raises ``HashMismatch`` / ``EdgeSetMismatch`` when the certificate is
    for another graph; returns False when the claim itself does not hold.
    """
    if io.graph_sha(g) != c.graph_sha:
        raise HashMismatch("certificate was issued for a different graph")
    d = Orientation.from_arcs(g, c.arcs)
    if d.max_outdeg > c.k - 1:
        return False
    diff = eulerian_diff(d, limit=limit).diff
    return diff != 0 and (c.diff is None or diff == c.diff)


# ---------------------------------------------------------------------------
# Bounds
# ---------------------------------------------------------------------------

def at_upper_bound(g: Graph) -> Certificate:
    """Acyclic degeneracy-order orientation: AT(G) <= degeneracy + 1."""
    dgn, peel = elimination_order(g)
    d = orient_by_order(g, peel[::-1])
    assert d.max_outdeg <= dgn
    # acyclic digraphs have only the empty Eulerian subgraph
    return Certificate(io.graph_sha(g), dgn + 1, d.arcs, 1, "degeneracy-order", True)


def density_bound(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max_density(g).ceil + 1


def at_lower_bound(g: Graph, chromatic_limit: int = 64) -> int:
    """max(ceil(max density) + 1, chromatic number).

    The chromatic part is skipped for graphs above ``chromatic_limit``.
    """
    lower = density_bound(g)
    try:
        lower = max(lower, chromatic_number(g, limit=chromatic_limit))
    except TooLarge:
        pass
    return lower


def bipartite_at(g: Graph) -> int:
    if not is_bipartite(g):
        raise NotBipartite("bipartite_at needs a bipartite graph")
    return density_bound(g)


# ---------------------------------------------------------------------------
# Exact search
# ---------------------------------------------------------------------------

@dataclass
class SearchStats:
    expanded: int = 0
    leaves: int = 0
    diffs: int = 0
    per_k: dict = field(default_factory=dict)


def find_at_orientation(g: Graph, k: int, budget: int = DEFAULT_BUDGET,
                        stats: Optional[SearchStats] = None) -> Optional[Orientation]:
    """First orientation with outdegrees <= k-1 and nonzero diff, else None.

    Edges are oriented one at a time in sorted order.  A partial state is
    identified by (edge index, outdegree vector); since |diff| depends only
    on the final outdegree vector, a state seen before is never re-expanded.
    Raises ``BudgetExceeded`` (with unknown bracket) past ``budget`` nodes.
    """
    stats = stats if stats is not None else SearchStats()
    cap = k - 1
    edges = g.edges
    m = len(edges)
    if m == 0:
        return Orientation(g, ())
    out = [0] * g.n
    arcs = [None] * m
    seen = set()
    found = []

    def rec(i):
        if i == m:
            stats.leaves += 1
            stats.diffs += 1
            d = Orientation(g, tuple(arcs))
            if eulerian_diff(d).diff != 0:
                found.append(d)
                return True
            return False
        key = (i, tuple(out))
        if key in seen:
            return False
        seen.add(key)
        stats.expanded += 1
        if stats.expanded > budget:
            raise BudgetExceeded(None, None, stats.expanded)
        u, v = edges[i]
        for t, h in ((u, v), (v, u)):
            if out[t] < cap:
                out[t] += 1
                arcs[i] = (t, h)
                if rec(i + 1):
                    return True
                out[t] -= 1
        return False

    rec(0)
    return found[0] if found else None


def at_exact(g: Graph, budget: int = DEFAULT_BUDGET,
             stats: Optional[SearchStats] = None) -> Tuple[int, Certificate]:
    """AT(G) with a certificate.

    Tries k from the lower bound up to (but excluding) the degeneracy bound;
    if every such k fails the degeneracy certificate is already optimal.
    """
    stats = stats if stats is not None else SearchStats()
    lower = at_lower_bound(g)
    upper_cert = at_upper_bound(g)
    upper = upper_cert.k
    for k in range(lower, upper):
        before = stats.expanded
        try:
            d = find_at_orientation(g, k, budget - stats.expanded, stats)
        except BudgetExceeded as exc:
            raise BudgetExceeded(k, upper, stats.expanded) from exc
        stats.per_k[k] = stats.expanded - before
        if d is not None:
            return k, make_certificate(d, "search", k)
    return upper, upper_cert


def find_nonzero_monomial(g: Graph, k: int, budget: int = 100_000,
                          order: Optional[Sequence[int]] = None) -> Optional[Tuple[int, ...]]:
    """Search exponent vectors bounded by k-1 for a nonzero coefficient.

    Vectors are enumerated depth-first over ``order`` (default: vertex
    order), larger exponents first.  ``budget`` caps the number of
    coefficients evaluated; exhausting it raises ``BudgetExceeded``.
    """
    cap = k - 1
    n = g.n
    order = list(order) if order is not None else list(range(n))
    degs = g.degrees
    hi = [min(cap, degs[v]) for v in order]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + hi[i]
    vec = [0] * n
    evaluated = 0

    def rec(i, need):
        nonlocal evaluated
        if i == n:
            if need:
                return None
            evaluated += 1
            if evaluated > budget:
                raise BudgetExceeded(None, None, evaluated)
            return tuple(vec) if monomial_coefficient(g, vec) != 0 else None
        for val in range(min(hi[i], need), -1, -1):
            if need - val > suffix[i + 1]:
                break
            vec[order[i]] = val
            hit = rec(i + 1, need - val)
            if hit is not None:
                return hit
        vec[order[i]] = 0
        return None

    if g.m > suffix[0]:
        return None
    return rec(0, g.m)


def at_orientation_by_coefficient(g: Graph, k: int, budget: int = 100_000) -> Optional[Certificate]:
    """Certificate for AT(G) <= k found through the polynomial route.

    A nonzero coefficient is turned into an orientation with those
    outdegrees, whose diff is then recomputed by Eulerian enumeration.
    """
    vec = find_nonzero_monomial(g, k, budget)
    if vec is None:
        return None
    d = realize_outdegrees(g, vec)
    if d is None:  # a nonzero coefficient always has a realising orientation
        raise RuntimeError("nonzero coefficient without an orientation")
    return make_certificate(d, "search", k)


# ---------------------------------------------------------------------------
# Explicit constructions
# ---------------------------------------------------------------------------

def subdivision_orientation(g: Graph) -> Certificate:
    """Orientation of S(G) with every edge-vertex pointing at its two ends."""
    s = subdivision(g)
    arcs = tuple((w, u) if w >= g.n else (u, w) for u, w in s.edges)
    d = Orientation(s, arcs)
    return Certificate(io.graph_sha(s), 3, d.arcs, eulerian_diff(d, limit=max(DIFF_EDGE_LIMIT, s.m)).diff,
                       "subdivision-construction", True)


def s_sum_orientation(g: Graph, h: Graph, d_h: Orientation, limit: int = 40) -> Certificate:
    """Orientation of G +_S H: every H-copy carries ``d_h``, edge-vertices point inward.

    ``diff`` is recomputed by enumeration when the result has at most
    ``limit`` edges; beyond that the certificate is marked unverified.
    """
    if d_h.base.edges != h.edges:
        raise ValueError("orientation is not of H")
    if eulerian_diff(d_h).diff == 0:
        raise NotATOrientation("the orientation of H has diff 0")
    k = max(3, d_h.max_outdeg + 1)
    gs = f_sum(g, h, "S")
    lay = FSumLayout(g.n, g.m, h.n)
    by_h_edge = dict(zip(h.edges, d_h.arcs))
    arcs = []
    for a, b in gs.edges:
        _, va = lay.unindex(a)
        _, vb = lay.unindex(b)
        if va == vb:
            # subdivision edge inside one layer; exactly one end is an edge-vertex
            arcs.append((b, a) if lay.is_original(a) else (a, b))
        else:
            t, _ = by_h_edge[(min(va, vb), max(va, vb))]
            arcs.append((a, b) if t == va else (b, a))
    d = Orientation(gs, tuple(arcs))
    if gs.m <= limit:
        return Certificate(io.graph_sha(gs), k, d.arcs, eulerian_diff(d, limit=limit).diff,
                           "s-sum-construction", True)
    return Certificate(io.graph_sha(gs), k, d.arcs, None, "s-sum-construction", False)
