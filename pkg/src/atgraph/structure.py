"""
Structural parameters: degeneracy, cores, chromatic number, densest subgraph,
and the AT = 2 / 2-choosability recognisers built on top of the core.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import networkx as nx

from .errors import Edgeless, NotConnected, TooLarge
from .graph import Graph, is_bipartite


# ---------------------------------------------------------------------------
# Degeneracy
# ---------------------------------------------------------------------------

def elimination_order(g: Graph) -> Tuple[int, Tuple[int, ...]]:
    """Smallest-last peel.  Returns ``(degeneracy, deletion_order)``.

    Bucket queue over current degrees; ties go to the smallest index so the
    order is deterministic.  Each vertex has at most ``degeneracy``
    neighbours still present when it is deleted.
    """
    n = g.n
    deg = g.degrees
    if n == 0:
        return 0, ()
    buckets = [set() for _ in range(max(deg) + 1)]
    for v, d in enumerate(deg):
        buckets[d].add(v)
    removed = [False] * n
    order = []
    best = 0
    lo = 0
    for _ in range(n):
        while not buckets[lo]:
            lo += 1
        v = min(buckets[lo])
        buckets[lo].discard(v)
        best = max(best, lo)
        removed[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not removed[w]:
                d = deg[w]
                buckets[d].discard(w)
                deg[w] = d - 1
                buckets[d - 1].add(w)
        lo = max(lo - 1, 0)
    return best, tuple(order)


def degeneracy(g: Graph) -> int:
    return elimination_order(g)[0]


def coloring_number(g: Graph) -> int:
    return degeneracy(g) + 1


# ---------------------------------------------------------------------------
# Core and its classification
# ---------------------------------------------------------------------------

def core(g: Graph) -> Graph:
    """Repeatedly prune vertices of degree at most one.

    A forest collapses to ``K_1`` (the surviving vertex is the last one
    standing under smallest-index-first pruning).  The result keeps
    ``Original(u)`` labels pointing back into ``g``.
    """
    if g.n == 0:
        return g
    deg = g.degrees
    alive = set(range(g.n))
    stack = sorted((v for v in range(g.n) if deg[v] <= 1), reverse=True)
    while stack and len(alive) > 1:
        v = stack.pop()
        if v not in alive or deg[v] > 1:
            continue
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    stack.append(w)
    return g.induced(alive)


@dataclass(frozen=True)
class CoreClass:
    """One of ``K1``, ``EvenCycle``, ``OddCycle``, ``Theta222m``, ``Other``.

    ``param`` is the cycle length for cycles and ``m`` for Θ_{2,2,2m}.
    """

    kind: str
    param: Optional[int] = None

    def __str__(self):
        return self.kind if self.param is None else f"{self.kind}({self.param})"


def classify_core(g: Graph) -> CoreClass:
    """Classify the core of ``g`` (computing it first; ``core`` is idempotent)."""
    c = core(g)
    if c.n == 1:
        return CoreClass("K1")
    if c.n == 0 or not c.is_connected():
        return CoreClass("Other")
    degs = c.degrees
    if all(d == 2 for d in degs):
        return CoreClass("EvenCycle" if c.n % 2 == 0 else "OddCycle", c.n)
    hubs = [v for v, d in enumerate(degs) if d == 3]
    if len(hubs) == 2 and all(d in (2, 3) for d in degs):
        lengths = _theta_paths(c, *hubs)
        if lengths is not None:
            a, b, cc = sorted(lengths)
            if a == 2 and b == 2 and cc % 2 == 0:
                return CoreClass("Theta222m", cc // 2)
    return CoreClass("Other")


def _theta_paths(g, u, v):
    """Lengths of the three u-v paths if ``g`` is a theta graph on hubs u, v."""
    lengths = []
    for start in sorted(g.adj[u]):
        prev, cur, steps = u, start, 1
        while cur != v:
            if g.degree(cur) != 2:
                return None
            nxt = next(w for w in g.adj[cur] if w != prev)
            prev, cur, steps = cur, nxt, steps + 1
        lengths.append(steps)
    return lengths if len(lengths) == 3 else None


def _require_connected(g, need_edge=False):
    if not g.is_connected():
        raise NotConnected("graph is not connected")
    if need_edge and g.m == 0:
        raise Edgeless("graph has no edges")


def at_equals_two(g: Graph) -> bool:
    """AT(G) = 2 iff the core is K_1 or an even cycle (connected G, m >= 1).

    For bipartite input the edge-count criterion ``m <= n`` is evaluated as
    well; a disagreement between the two would be a bug and raises.
    """
    _require_connected(g, need_edge=True)
    verdict = classify_core(g).kind in ("K1", "EvenCycle")
    if is_bipartite(g) and verdict != (g.m <= g.n):
        raise RuntimeError(f"core criterion and edge-count criterion disagree on {g!r}")
    return verdict


def two_choosable(g: Graph) -> bool:
    _require_connected(g)
    return classify_core(g).kind in ("K1", "EvenCycle", "Theta222m")


# ---------------------------------------------------------------------------
# Chromatic number
# ---------------------------------------------------------------------------

CHROMATIC_VERTEX_LIMIT = 64


def chromatic_number(g: Graph, limit: int = CHROMATIC_VERTEX_LIMIT) -> int:
    """Exact chromatic number by DSATUR branch and bound.

    Tries ``k`` upward from a greedy clique size and stops at the DSATUR
    heuristic colour count, which is always achievable.
    """
    if g.n > limit:
        raise TooLarge(f"{g.n} vertices exceeds chromatic limit {limit}")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    masks = g.adj_mask
    lower = _greedy_clique(g)
    upper = max(_dsatur_greedy(g)) + 1
    for k in range(lower, upper):
        if _k_colorable(g.n, masks, k):
            return k
    return upper


def proper_coloring(g: Graph, k: int):
    """A proper colouring with ``k`` colours as a list, or ``None``."""
    col = [-1] * g.n
    if _k_colorable(g.n, g.adj_mask, k, col):
        return col
    return None


def _greedy_clique(g):
    best = 1
    for start in range(g.n):
        clique = [start]
        cand = g.adj_mask[start]
        while cand:
            v = max(_bits(cand), key=g.degree)
            clique.append(v)
            cand &= g.adj_mask[v]
        best = max(best, len(clique))
    return best


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _dsatur_greedy(g):
    n = g.n
    col = [-1] * n
    sat = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if col[u] < 0),
                key=lambda u: (len(sat[u]), g.degree(u), -u))
        c = 0
        while c in sat[v]:
            c += 1
        col[v] = c
        for w in g.adj[v]:
            sat[w].add(c)
    return col


def _k_colorable(n, masks, k, out=None):
    col = [-1] * n
    # colour_masks[c] = set of vertices that currently hold colour c
    colour_masks = [0] * k

    def saturation(v):
        return sum(1 for c in range(k) if colour_masks[c] & masks[v])

    def rec(done, used):
        if done == n:
            return True
        v = max((u for u in range(n) if col[u] < 0),
                key=lambda u: (saturation(u), bin(masks[u]).count("1")))
        for c in range(min(used + 1, k)):
            if colour_masks[c] & masks[v]:
                continue
            col[v] = c
            colour_masks[c] |= 1 << v
            if rec(done + 1, max(used, c + 1)):
                return True
            colour_masks[c] &= ~(1 << v)
            col[v] = -1
        return False

    ok = rec(0, 0)
    if ok and out is not None:
        out[:] = col
    return ok


# ---------------------------------------------------------------------------
# Maximum subgraph density
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Density:
    """Exact ``edges / vertices`` of a densest subgraph and its vertex set."""

    edges: int
    vertices: int
    witness: Tuple[int, ...]

    @property
    def value(self) -> Fraction:
        return Fraction(self.edges, self.vertices)

    @property
    def ceil(self) -> int:
        return -(-self.edges // self.vertices)

    def __str__(self):
        return f"{self.edges}/{self.vertices}"


def max_density(g: Graph) -> Density:
    """Densest subgraph by Dinkelbach iteration over a max-closure min cut.

    Starting from the whole graph with density p/q, each round maximises
    ``q*|E(S)| - p*|V(S)|`` exactly; a positive optimum is a strictly denser
    set and becomes the new guess.  Densities are ratios with denominator
    at most n, so the loop terminates at the exact optimum.
    """
    if g.n < 1:
        raise ValueError("max_density needs at least one vertex")
    witness = tuple(range(g.n))
    p, q = g.m, g.n
    if g.m == 0:
        return Density(0, 1, (0,))
    while True:
        gain, subset = _best_closure(g, p, q)
        if gain <= 0:
            break
        sub = g.induced(subset)
        p, q, witness = sub.m, sub.n, tuple(sorted(subset))
    return Density(p, q, witness)


def _best_closure(g, p, q):
    net = nx.DiGraph()
    net.add_nodes_from(("s", "t"))
    for i, (u, v) in enumerate(g.edges):
        net.add_edge("s", ("e", i), capacity=q)
        net.add_edge(("e", i), ("v", u))  # no capacity attribute = infinite
        net.add_edge(("e", i), ("v", v))
    for v in range(g.n):
        net.add_edge(("v", v), "t", capacity=p)
    cut, (source_side, _) = nx.minimum_cut(net, "s", "t")
    subset = [node[1] for node in source_side if isinstance(node, tuple) and node[0] == "v"]
    return q * g.m - cut, subset


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    degeneracy: int
    elimination_order: Tuple[int, ...]
    coloring_number: int
    core: Graph
    core_class: CoreClass
    chromatic: Optional[int] = None


def structure_report(g: Graph, chromatic: bool = False) -> StructureReport:
    d, order = elimination_order(g)
    chi = chromatic_number(g) if chromatic else None
    return StructureReport(d, order, d + 1, core(g), classify_core(g), chi)
