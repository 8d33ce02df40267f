"""
Operation graphs S, R, Q, T, the Cartesian product and the four F-sums.

Numbering conventions (relied on by certificates and DOT output):

* ``F(G)`` keeps the originals as ``0..n-1`` and puts the vertex of the
  ``i``-th edge (sorted order) at ``n + i``.
* ``G □ H`` and ``G +_F H`` are H-major: the copy of the first factor that
  sits over vertex ``v`` of ``H`` occupies ``v*N .. v*N + N - 1`` where ``N``
  is the order of the first factor (``n_G + m_G`` for F-sums).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .graph import EdgeVertex, Graph, Original, Pair


class FKind(enum.Enum):
    S = "S"
    R = "R"
    Q = "Q"
    T = "T"

    @classmethod
    def parse(cls, text):
        try:
            return cls(str(text).upper())
        except ValueError:
            raise ValueError(f"unknown F-operation {text!r}; expected one of S, R, Q, T") from None

    def __str__(self):
        return self.value


def _base_labels(g):
    return [Original(u) for u in range(g.n)] + [EdgeVertex(u, v) for u, v in g.edges]


def _subdivision_edges(g):
    n = g.n
    out = []
    for i, (u, v) in enumerate(g.edges):
        out.append((u, n + i))
        out.append((v, n + i))
    return out


def _adjacent_edge_pairs(g):
    """Pairs of edge-vertex indices whose edges share an endpoint."""
    n = g.n
    incident = [[] for _ in range(n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for lst in incident:
        for i, j in combinations(lst, 2):
            pairs.add((n + i, n + j))
    return pairs


def subdivision(g: Graph) -> Graph:
    """S(G): every edge replaced by a path of length two."""
    return Graph.from_edges(g.n + g.m, _subdivision_edges(g), _base_labels(g))


def triangle_parallel(g: Graph) -> Graph:
    """R(G): G plus, per edge, a new vertex joined to both ends."""
    edges = _subdivision_edges(g) + list(g.edges)
    return Graph.from_edges(g.n + g.m, edges, _base_labels(g))


def line_superposition(g: Graph) -> Graph:
    """Q(G): S(G) plus edges between vertices of adjacent edges."""
    edges = _subdivision_edges(g) + list(_adjacent_edge_pairs(g))
    return Graph.from_edges(g.n + g.m, edges, _base_labels(g))


def total_graph(g: Graph) -> Graph:
    r = triangle_parallel(g)
    q = line_superposition(g)
    return Graph.from_edges(r.n, set(r.edges) | set(q.edges), r.labels)


_OPS = {
    FKind.S: subdivision,
    FKind.R: triangle_parallel,
    FKind.Q: line_superposition,
    FKind.T: total_graph,
}


def apply_op(g: Graph, kind) -> Graph:
    return _OPS[FKind.parse(kind) if not isinstance(kind, FKind) else kind](g)


def cartesian(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex ``(x, y)`` at index ``y * n_G + x``."""
    ng = g.n
    edges = []
    for y in range(h.n):
        base = y * ng
        edges.extend((base + u, base + v) for u, v in g.edges)
    for y1, y2 in h.edges:
        for x in range(ng):
            edges.append((y1 * ng + x, y2 * ng + x))
    labels = [Pair(g.labels[x], y) for y in range(h.n) for x in range(ng)]
    return Graph.from_edges(ng * h.n, edges, labels)


@dataclass(frozen=True)
class FSumLayout:
    """Index bookkeeping for ``G +_F H``."""

    n_g: int
    m_g: int
    n_h: int

    @property
    def layer_size(self):
        return self.n_g + self.m_g

    @property
    def order(self):
        return self.layer_size * self.n_h

    def index(self, w, v):
        """Index of vertex ``(w, v)``; ``w`` is an F(G) index, ``v`` an H vertex."""
        return v * self.layer_size + w

    def unindex(self, i):
        v, w = divmod(i, self.layer_size)
        return w, v

    def is_original(self, i):
        return i % self.layer_size < self.n_g

    def deleted_edges(self, h: Graph):
        """E*: copies of H-edges at edge-vertices, removed from the product."""
        out = set()
        for v1, v2 in h.edges:
            for w in range(self.n_g, self.layer_size):
                a, b = self.index(w, v1), self.index(w, v2)
                out.add((a, b) if a < b else (b, a))
        return out


def f_sum(g: Graph, h: Graph, kind) -> Graph:
    """G +_F H built straight from the adjacency rule.

    Two vertices are adjacent when they share an original G-vertex and
    their H-coordinates are adjacent, or share an H-coordinate and are
    adjacent in F(G).
    """
    kind = kind if isinstance(kind, FKind) else FKind.parse(kind)
    if g.n < 1 or h.n < 1:
        raise ValueError("F-sum factors need at least one vertex")
    fg = _OPS[kind](g)
    lay = FSumLayout(g.n, g.m, h.n)
    edges = []
    for v in range(h.n):
        edges.extend((lay.index(a, v), lay.index(b, v)) for a, b in fg.edges)
    for v1, v2 in h.edges:
        for u in range(g.n):
            edges.append((lay.index(u, v1), lay.index(u, v2)))
    labels = [Pair(fg.labels[w], v) for v in range(h.n) for w in range(lay.layer_size)]
    return Graph.from_edges(lay.order, edges, labels)


def f_sum_via_product(g: Graph, h: Graph, kind) -> Graph:
    """Second construction route: ``F(G) □ H`` with E* deleted."""
    kind = kind if isinstance(kind, FKind) else FKind.parse(kind)
    prod = cartesian(_OPS[kind](g), h)
    estar = FSumLayout(g.n, g.m, h.n).deleted_edges(h)
    return Graph.from_edges(prod.n, [e for e in prod.edges if e not in estar], prod.labels)
