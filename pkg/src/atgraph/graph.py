"""
Immutable simple graphs, vertex provenance labels and the standard families.

Vertices are always the dense integers ``0..n-1``.  Where a vertex came from
(an original vertex, the midpoint of an edge, a product pair) is recorded
separately in ``Graph.labels`` so that search code can work on plain indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import DuplicateEdge, InvalidParameter, OutOfRange, SelfLoop

Edge = Tuple[int, int]


# ---------------------------------------------------------------------------
# Vertex labels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Plain:
    def __str__(self):
        return "."


@dataclass(frozen=True)
class Original:
    u: int

    def __str__(self):
        return str(self.u)


@dataclass(frozen=True)
class EdgeVertex:
    u: int
    v: int

    def __post_init__(self):
        if not self.u < self.v:
            raise InvalidParameter(f"EdgeVertex needs u < v, got ({self.u}, {self.v})")

    def __str__(self):
        return f"e{self.u}-{self.v}"


@dataclass(frozen=True)
class Pair:
    inner: "VertexLabel"
    h: int

    def __str__(self):
        return f"({self.inner},{self.h})"


VertexLabel = Union[Plain, Original, EdgeVertex, Pair]

PLAIN = Plain()


def label_to_json(label):
    if isinstance(label, Plain):
        return ["plain"]
    if isinstance(label, Original):
        return ["orig", label.u]
    if isinstance(label, EdgeVertex):
        return ["edge", label.u, label.v]
    return ["pair", label_to_json(label.inner), label.h]


def label_from_json(obj):
    tag = obj[0]
    if tag == "plain":
        return PLAIN
    if tag == "orig":
        return Original(int(obj[1]))
    if tag == "edge":
        return EdgeVertex(int(obj[1]), int(obj[2]))
    if tag == "pair":
        return Pair(label_from_json(obj[1]), int(obj[2]))
    raise ValueError(f"unknown label tag {tag!r}")


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    ``edges`` is kept as a sorted tuple of pairs ``(u, v)`` with ``u < v``.
    Construct through :func:`build` (validating) or :meth:`from_edges`.
    """

    n: int
    edges: Tuple[Edge, ...]
    labels: Tuple[VertexLabel, ...] = field(compare=True)

    @classmethod
    def from_edges(cls, n, edges, labels=None):
        """Trusted constructor: normalizes and sorts but checks only cheaply."""
        norm = sorted({(u, v) if u < v else (v, u) for u, v in edges})
        if labels is None:
            labels = (PLAIN,) * n
        labels = tuple(labels)
        if len(labels) != n:
            raise InvalidParameter(f"{len(labels)} labels for {n} vertices")
        return cls(n, tuple(norm), labels)

    @property
    def m(self):
        return len(self.edges)

    @cached_property
    def adj(self) -> Tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_mask(self) -> Tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def degree(self, v):
        return len(self.adj[v])

    @property
    def degrees(self):
        return [len(a) for a in self.adj]

    def has_edge(self, u, v):
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    def edge_index(self, u, v):
        """Rank of edge ``{u, v}`` in the sorted edge order."""
        if u > v:
            u, v = v, u
        return self._edge_rank[(u, v)]

    @cached_property
    def _edge_rank(self):
        return {e: i for i, e in enumerate(self.edges)}

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, renumbered in increasing vertex order.

        The new labels are ``Original(old_index)``.
        """
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph.from_edges(len(keep), edges, [Original(v) for v in keep])

    def with_plain_labels(self) -> "Graph":
        return Graph(self.n, self.edges, (PLAIN,) * self.n)

    def is_connected(self):
        if self.n == 0:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build(n: int, edges: Sequence[Edge], labels=None) -> Graph:
    """Validate and build a graph; duplicates and loops are errors, not merged."""
    if n < 0:
        raise OutOfRange(f"negative vertex count {n}")
    seen = set()
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge #{i} ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"edge #{i} is a loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge #{i} {key} repeated")
        seen.add(key)
    return Graph.from_edges(n, seen, labels)


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Star:
    """K_{1,n}: ``n`` leaves around centre vertex 0."""

    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Theta:
    a: int
    b: int
    c: int


GraphFamily = Union[Path, Cycle, Star, Complete, Theta]


def path(n):
    return generate(Path(n))


def cycle(n):
    return generate(Cycle(n))


def star(n):
    return generate(Star(n))


def complete(n):
    return generate(Complete(n))


def theta(a, b, c):
    return generate(Theta(a, b, c))


def generate(family: GraphFamily) -> Graph:
    """Canonically numbered member of a standard family.

    Path(n): 0-1-...-(n-1).  Cycle(n): the path plus edge (0, n-1).
    Star(n): centre 0, leaves 1..n.  Complete(n): all pairs.
    Theta(a,b,c): hubs 0 and 1, then the interior vertices of the length-a,
    length-b and length-c paths in that order, each walked from hub 0.
    """
    if isinstance(family, Path):
        _need(family.n >= 1, family)
        return Graph.from_edges(family.n, [(i, i + 1) for i in range(family.n - 1)])
    if isinstance(family, Cycle):
        _need(family.n >= 3, family)
        n = family.n
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if isinstance(family, Star):
        _need(family.n >= 1, family)
        return Graph.from_edges(family.n + 1, [(0, i) for i in range(1, family.n + 1)])
    if isinstance(family, Complete):
        _need(family.n >= 1, family)
        n = family.n
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if isinstance(family, Theta):
        a, b, c = family.a, family.b, family.c
        _need(1 <= a <= b <= c, family)
        _need(b >= 2, family)  # two length-1 paths would be a multi-edge
        edges = []
        nxt = 2
        for length in (a, b, c):
            prev = 0
            for _ in range(length - 1):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            edges.append((prev, 1))
        return Graph.from_edges(nxt, edges)
    raise InvalidParameter(f"unknown family {family!r}")


def _need(ok, family):
    if not ok:
        raise InvalidParameter(f"invalid parameters for {family!r}")


# ---------------------------------------------------------------------------
# Basic queries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Bipartition:
    """Result of :func:`is_bipartite`.

    ``sides`` is a 0/1 colour per vertex when the graph is bipartite, else
    ``None`` and ``odd_cycle`` lists the vertices of an odd cycle in order.
    """

    sides: Optional[Tuple[int, ...]]
    odd_cycle: Optional[Tuple[int, ...]] = None

    def __bool__(self):
        return self.sides is not None

    def parts(self):
        left = [v for v, s in enumerate(self.sides) if s == 0]
        right = [v for v, s in enumerate(self.sides) if s == 1]
        return left, right


def is_bipartite(g: Graph) -> Bipartition:
    colour = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return Bipartition(None, _odd_cycle(u, w, parent, depth))
    return Bipartition(tuple(colour))


def _odd_cycle(u, w, parent, depth):
    # climb both BFS-tree branches to their lowest common ancestor
    left, right = [u], [w]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return tuple(left + right[-2::-1])


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    sequence: Tuple[int, ...]


def degree_profile(g: Graph) -> DegreeProfile:
    seq = tuple(g.degrees)
    if not seq:
        return DegreeProfile(0, 0, ())
    return DegreeProfile(min(seq), max(seq), seq)
