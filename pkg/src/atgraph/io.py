"""Graph serialization: JSON, plain edge lists, DOT, and the canonical digest."""

import hashlib
import json

from .errors import DuplicateEdge, OutOfRange, ParseError, SelfLoop
from .graph import EdgeVertex, Graph, Pair, Plain, label_from_json, label_to_json


def to_json_obj(g: Graph, labels=True):
    obj = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if labels and not all(isinstance(lab, Plain) for lab in g.labels):
        obj["labels"] = [label_to_json(lab) for lab in g.labels]
    return obj


def to_json(g: Graph, labels=True, indent=None) -> str:
    return json.dumps(to_json_obj(g, labels), indent=indent)


def canonical_json(g: Graph) -> str:
    """Byte-stable form used for hashing: labels dropped, edges sorted."""
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]},
                      separators=(",", ":"), sort_keys=True)


def graph_sha(g: Graph) -> str:
    return hashlib.sha256(canonical_json(g).encode("ascii")).hexdigest()


def from_json_obj(obj) -> Graph:
    try:
        n = int(obj["n"])
        raw = [(int(u), int(v)) for u, v in obj.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph object: {exc}") from None
    labels = None
    if obj.get("labels") is not None:
        try:
            labels = [label_from_json(x) for x in obj["labels"]]
        except (ValueError, IndexError, TypeError) as exc:
            raise ParseError(f"malformed label: {exc}") from None
        if len(labels) != n:
            raise ParseError(f"{len(labels)} labels for {n} vertices")
    _check_edges(n, [(u, v, None) for u, v in raw])
    return Graph.from_edges(n, raw, labels)


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; blank lines and ``#`` comments skipped."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty input", line=1)
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError(f"expected 'n m', got {' '.join(head)!r}", line=lineno)
    n, m = _ints(head, lineno)
    body = rows[1:]
    if len(body) != m:
        where = body[-1][0] if body else lineno
        raise ParseError(f"header promises {m} edges, found {len(body)}", line=where)
    edges = []
    for lineno, toks in body:
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {' '.join(toks)!r}", line=lineno)
        u, v = _ints(toks, lineno)
        edges.append((u, v, lineno))
    _check_edges(n, edges)
    return Graph.from_edges(n, [(u, v) for u, v, _ in edges])


def _ints(toks, lineno):
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise ParseError(f"non-integer token in {' '.join(toks)!r}", line=lineno) from None


def _check_edges(n, edges):
    if n < 0:
        raise OutOfRange(f"negative vertex count {n}")
    seen = set()
    for u, v, line in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"endpoint of ({u}, {v}) outside 0..{n - 1}", line=line)
        if u == v:
            raise SelfLoop(f"loop at vertex {u}", line=line)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {key} repeated", line=line)
        seen.add(key)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "edgelist"
    if fmt == "json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, line=exc.lineno) from None
        return from_json_obj(obj)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown format {fmt!r}")


def emit_dot(g: Graph, name="G", arcs=None, show_index=True) -> str:
    """DOT text for ``g``; pass ``arcs`` (tail, head) pairs to draw a digraph."""
    directed = arcs is not None
    out = [f"{'digraph' if directed else 'graph'} {name} {{"]
    for v, lab in enumerate(g.labels):
        text = str(lab) if not isinstance(lab, Plain) else str(v)
        if show_index and not isinstance(lab, Plain):
            text = f"{v}: {text}"
        shape = ""
        if _is_edge_vertex(lab):
            shape = ", shape=box"
        out.append(f'  {v} [label="{text}"{shape}];')
    if directed:
        for t, h in arcs:
            out.append(f"  {t} -> {h};")
    else:
        for u, v in g.edges:
            out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def _is_edge_vertex(lab):
    while isinstance(lab, Pair):
        lab = lab.inner
    return isinstance(lab, EdgeVertex)
