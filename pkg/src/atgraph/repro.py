"""
Reproduction harness: recompute every numbered claim on concrete instances.

Each target yields rows comparing a value computed here against the value
the published statement asserts.  Rows are ``pass``, ``fail`` or
``inconclusive`` (search budget ran out); inconclusive never counts as a pass.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional

import networkx as nx

from .at import (at_exact, at_lower_bound, at_upper_bound, bipartite_at,
                 monomial_coefficient, s_sum_orientation, subdivision_orientation,
                 verify_certificate)
from .errors import BudgetExceeded
from .graph import Graph, complete, cycle, degree_profile, is_bipartite, path, star
from .structure import at_equals_two, degeneracy
from .transforms import f_sum, subdivision

TARGETS = ("cor-3.3", "cor-3.4", "cor-3.5", "cor-3.7", "cor-3.9", "cor-3.11",
           "thm-1", "thm-2", "thm-3", "thm-4", "thm-5", "thm-6",
           "lemma-2.2", "lemma-2.4", "appendix-coeff")

# per-target (nmax, mmax) defaults; None means the target has no n/m range
DEFAULT_RANGES = {
    "cor-3.3": (6, 6), "cor-3.4": (6, 6), "cor-3.5": (6, 6),
    "cor-3.7": (6, 6), "cor-3.9": (6, 6), "cor-3.11": (7, 5),
    "thm-5": (5, None), "lemma-2.4": (7, None),
}

SEARCH_BUDGET = 2_000_000

# Edge list of the 28-vertex graph from the published coefficient program,
# 1-based, kept verbatim (including its (20, 22) entry).
REFERENCE_EDGES = (
    (1, 2), (1, 4), (1, 5), (2, 3), (2, 5), (2, 6), (3, 6), (3, 7),
    (4, 5), (5, 6), (6, 7), (4, 11), (5, 12), (6, 13), (7, 14), (8, 9),
    (8, 11), (8, 12), (9, 10), (9, 12), (9, 13), (10, 13), (10, 14),
    (11, 12), (12, 13), (13, 14), (11, 18), (12, 19), (13, 20),
    (14, 21), (15, 16), (15, 18), (15, 19), (16, 17), (16, 19),
    (16, 20), (17, 20), (17, 21), (18, 19), (19, 20), (20, 21),
    (18, 25), (19, 26), (20, 22), (21, 28), (22, 23), (22, 25),
    (22, 26), (23, 24), (23, 26), (23, 27), (24, 27), (24, 28),
    (25, 26), (26, 27), (27, 28),
)
# (20, 22) joins layer 3 to an edge-vertex of layer 4, which the layer
# structure forbids; the original-to-original edge is (20, 27).
REFERENCE_EDGES_FIXED = tuple((20, 27) if e == (20, 22) else e for e in REFERENCE_EDGES)


def reference_to_layout(p: int) -> int:
    """Map a 1-based vertex of the reference listing to its index in ``f_sum(P4, P4, T)``.

    Each block of 7 is one layer: positions 1-3 are the edge-vertices,
    4-7 the path vertices.
    """
    layer, j = divmod(p - 1, 7)
    return layer * 7 + (j + 4 if j < 3 else j - 3)


@dataclass
class Row:
    target: str
    instance: str
    vertices: int
    edges: int
    computed: object
    expected: object
    method: str
    status: str
    elapsed: float = 0.0
    note: str = ""


@dataclass
class Report:
    target: str
    rows: List[Row] = field(default_factory=list)

    @property
    def passed(self):
        return all(r.status == "pass" for r in self.rows)

    def counts(self):
        out = {"pass": 0, "fail": 0, "inconclusive": 0}
        for r in self.rows:
            out[r.status] += 1
        return out

    def to_json_obj(self, timing=True):
        rows = []
        for r in self.rows:
            d = asdict(r)
            if not timing:
                d.pop("elapsed")
            rows.append(d)
        return {"target": self.target, "passed": self.passed, "counts": self.counts(), "rows": rows}


class _Clock:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def resolve_at(g: Graph, budget: int = SEARCH_BUDGET):
    """Cheapest sufficient route to AT(g): ``(value, method, note)``.

    Bipartite graphs use the density formula; otherwise a lower/upper
    squeeze; otherwise exact search.  ``value`` is None when the search
    budget runs out.
    """
    if g.m and is_bipartite(g):
        return bipartite_at(g), "bipartite-density", ""
    lower = at_lower_bound(g)
    upper = at_upper_bound(g).k
    if lower == upper:
        return lower, "bounds-squeeze", f"lower={lower} upper={upper}"
    try:
        k, cert = at_exact(g, budget=budget)
    except BudgetExceeded as exc:
        return None, "search", f"budget exceeded; AT in [{exc.lower}, {exc.upper}]"
    if not verify_certificate(g, cert):
        return None, "search", "certificate failed re-verification"
    return k, "search", f"lower={lower} upper={upper} diff={cert.diff}"


def _status(computed, expected):
    if computed is None:
        return "inconclusive"
    return "pass" if computed == expected else "fail"


def _at_row(target, name, g, expected, budget=SEARCH_BUDGET):
    with _Clock() as clk:
        value, method, note = resolve_at(g, budget)
    return Row(target, name, g.n, g.m, value, expected, method,
               _status(value, expected), clk.elapsed, note)


# ---------------------------------------------------------------------------
# S-sum tables
# ---------------------------------------------------------------------------

def _s_sum_rows(target, family, label, n_lo, nmax, mmax, expected_fn):
    rows = []
    for n in range(n_lo, nmax + 1):
        for m in range(2, mmax + 1):
            g = f_sum(family(n), path(m), "S")
            name = f"{label}{n} +S P{m}"
            with _Clock() as clk:
                value = bipartite_at(g)
                upper = at_upper_bound(g).k
            expected = expected_fn(n, m)
            ok = value == expected and upper >= value
            note = f"upper={upper}"
            if expected == 2:
                two = at_equals_two(g)
                ok = ok and two
                note += f" at_equals_two={two}"
            rows.append(Row(target, name, g.n, g.m, value, expected, "bipartite-density",
                            "pass" if ok else "fail", clk.elapsed, note))
    return rows


def _cor_3_3(nmax, mmax, **_):
    return _s_sum_rows("cor-3.3", path, "P", 2, nmax, mmax,
                       lambda n, m: 2 if (n, m) == (2, 2) else 3)


def _cor_3_4(nmax, mmax, **_):
    return _s_sum_rows("cor-3.4", cycle, "C", 3, nmax, mmax, lambda n, m: 3)


def _cor_3_5(nmax, mmax, **_):
    return _s_sum_rows("cor-3.5", star, "S", 3, nmax, mmax, lambda n, m: 3)


# ---------------------------------------------------------------------------
# R, Q, T tables
# ---------------------------------------------------------------------------

def _path_sum_rows(target, kind, nmax, mmax, expected_fn, budget):
    rows = []
    for n in range(2, nmax + 1):
        for m in range(2, mmax + 1):
            g = f_sum(path(n), path(m), kind)
            rows.append(_at_row(target, f"P{n} +{kind} P{m}", g, expected_fn(n, m), budget))
    return rows


def cor_3_11_expected(n, m):
    """Value of AT(P_n +T P_m) following the proof's case analysis."""
    if (n == 4 and m >= 5) or (n >= 7 and m == 2) or (n >= 5 and m >= 3):
        return 4
    return 3


def _cor_3_7(nmax, mmax, budget, **_):
    return _path_sum_rows("cor-3.7", "R", nmax, mmax, lambda n, m: 3, budget)


def _cor_3_9(nmax, mmax, budget, **_):
    return _path_sum_rows("cor-3.9", "Q", nmax, mmax,
                          lambda n, m: 2 if (n, m) == (2, 2) else 3, budget)


def _cor_3_11(nmax, mmax, budget, **_):
    return _path_sum_rows("cor-3.11", "T", nmax, mmax, cor_3_11_expected, budget)


# ---------------------------------------------------------------------------
# Degeneracy bounds
# ---------------------------------------------------------------------------

def degeneracy_corpus():
    bases = ([(f"P{n}", path(n)) for n in range(2, 6)]
             + [(f"C{n}", cycle(n)) for n in range(3, 6)]
             + [(f"S{n}", star(n)) for n in range(3, 6)]
             + [("K4", complete(4)), ("K5", complete(5))])
    partners = ([(f"P{n}", path(n)) for n in range(2, 5)]
                + [(f"C{n}", cycle(n)) for n in range(3, 5)]
                + [("K4", complete(4))])
    return bases, partners


def degeneracy_bound(kind, g, h):
    """Published degeneracy bound for for ``g +kind h``."""
    k, l = degeneracy(g), degeneracy(h)
    if kind == "S":
        return 2 if l <= 2 else l
    if kind == "R":
        return k + l
    delta = degree_profile(g).max_degree
    if kind == "Q":
        return max(2 * delta - 2, k + l)
    return max(2 * delta, k + l)


def _degeneracy_rows(target, kind):
    bases, partners = degeneracy_corpus()
    rows = []
    for gname, g in bases:
        if kind == "Q" and degree_profile(g).max_degree <= 1:
            continue  # the Q bound assumes maximum degree above one
        for hname, h in partners:
            with _Clock() as clk:
                s = f_sum(g, h, kind)
                measured = degeneracy(s)
                bound = degeneracy_bound(kind, g, h)
            rows.append(Row(target, f"{gname} +{kind} {hname}", s.n, s.m, measured, bound,
                            "degeneracy<=bound", "pass" if measured <= bound else "fail",
                            clk.elapsed, f"gap={bound - measured}"))
    return rows


def _thm(kind):
    def run(**_):
        return _degeneracy_rows(f"thm-{'SRQT'.index(kind) + 1}", kind)
    return run


# ---------------------------------------------------------------------------
# Exact values
# ---------------------------------------------------------------------------

def _thm_5(nmax, **_):
    rows = []
    for n in range(3, nmax + 1):
        kn = complete(n)
        with _Clock() as clk:
            s = subdivision(kn)
            value = bipartite_at(s)
            cert = subdivision_orientation(kn)
            ok_cert = verify_certificate(s, cert) and cert.k == 3 and cert.diff == 1
            lower = at_lower_bound(s)
        ok = value == 3 and ok_cert and lower == 3
        rows.append(Row("thm-5", f"S(K{n})", s.n, s.m, value, 3, "bipartite-density+certificate",
                        "pass" if ok else "fail", clk.elapsed,
                        f"lower={lower} cert_k={cert.k} cert_diff={cert.diff}"))
    return rows


THM6_PAIRS = (
    ("P2", path(2), "P2", path(2)),
    ("P3", path(3), "P2", path(2)),
    ("C4", cycle(4), "P3", path(3)),
    ("P2", path(2), "C3", cycle(3)),
    ("P3", path(3), "K4", complete(4)),
    ("C4", cycle(4), "C3", cycle(3)),
    ("P2", path(2), "C5", cycle(5)),
)


def thm_6_expected(g, h, at_h):
    if at_h == 2:
        return 2 if (g.n, g.m, h.n, h.m) == (2, 1, 2, 1) else 3
    return at_h


def _thm_6(budget, **_):
    rows = []
    for gname, g, hname, h in THM6_PAIRS:
        with _Clock() as clk:
            at_h, cert_h = at_exact(h, budget=budget)
            s = f_sum(g, h, "S")
            expected = thm_6_expected(g, h, at_h)
            if at_h == 2:
                value, method, note = resolve_at(s, budget)
            else:
                d_h = cert_h.orientation(h)
                cert = s_sum_orientation(g, h, d_h)
                lower = at_lower_bound(s)
                good = cert.verified and cert.diff != 0 and verify_certificate(s, cert)
                value = cert.k if good and lower == cert.k else None
                method = "s-sum-construction+lower-bound"
                note = f"lower={lower} cert_k={cert.k} diff={cert.diff} verified={cert.verified}"
        rows.append(Row("thm-6", f"{gname} +S {hname} (AT(H)={at_h})", s.n, s.m, value, expected,
                        method, _status(value, expected), clk.elapsed, note))
    return rows


def random_connected_bipartite(rng: random.Random, max_edges=12, max_side=5) -> Graph:
    a = rng.randint(1, max_side)
    b = rng.randint(1, max_side)
    left, right = list(range(a)), list(range(a, a + b))
    # random spanning tree that alternates sides, then extra cross edges
    order = left + right
    rng.shuffle(order)
    placed = [order[0]]
    edges = set()
    pending = order[1:]
    while pending:
        for v in list(pending):
            opp = [u for u in placed if (u < a) != (v < a)]
            if opp:
                u = rng.choice(opp)
                edges.add((min(u, v), max(u, v)))
                placed.append(v)
                pending.remove(v)
    all_cross = [(u, v) for u in left for v in right if (u, v) not in edges]
    room = max(0, min(max_edges, a * b) - len(edges))
    extra = rng.randint(0, min(room, len(all_cross)))
    edges.update(rng.sample(all_cross, extra))
    return Graph.from_edges(a + b, edges)


def _bipartite_formula(seed, samples=100, budget=SEARCH_BUDGET, **_):
    rng = random.Random(seed)
    rows = []
    for i in range(samples):
        g = random_connected_bipartite(rng)
        while g.m > 12 or g.m == 0:
            g = random_connected_bipartite(rng)
        with _Clock() as clk:
            expected = bipartite_at(g)
            try:
                value, _ = at_exact(g, budget=budget)
            except BudgetExceeded:
                value = None
        rows.append(Row("lemma-2.2", f"random#{i} {list(g.edges)}", g.n, g.m, value, expected,
                        "search-vs-density", _status(value, expected), clk.elapsed))
    return rows


def connected_graphs(max_vertices):
    """Every connected graph with 2..max_vertices vertices (up to isomorphism)."""
    if max_vertices > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    for gx in nx.graph_atlas_g():
        if 2 <= gx.number_of_nodes() <= max_vertices and nx.is_connected(gx):
            yield Graph.from_edges(gx.number_of_nodes(), gx.edges())


def _at_two_census(nmax, budget, **_):
    by_n = {}
    for g in connected_graphs(nmax):
        total, bad, bip_bad, secs = by_n.get(g.n, (0, 0, 0, 0.0))
        with _Clock() as clk:
            k, _ = at_exact(g, budget=budget)
            mismatch = (k == 2) != at_equals_two(g)
            bmis = bool(is_bipartite(g)) and ((k == 2) != (g.m <= g.n))
        by_n[g.n] = (total + 1, bad + mismatch, bip_bad + bmis, secs + clk.elapsed)
    rows = []
    for n, (total, bad, bip_bad, secs) in sorted(by_n.items()):
        rows.append(Row("lemma-2.4", f"all connected graphs on {n} vertices", n, 0,
                        bad + bip_bad, 0, "search-vs-core-class",
                        "pass" if bad + bip_bad == 0 else "fail", secs,
                        f"{total} graphs; core mismatches={bad}; m<=n mismatches={bip_bad}"))
    return rows


def _reference_coefficient(**_):
    rows = []
    g = f_sum(path(4), path(4), "T")
    with _Clock() as clk:
        value = monomial_coefficient(g, [2] * g.n)
    rows.append(Row("appendix-coeff", "P4 +T P4, all exponents 2", g.n, g.m, value, 12,
                    "monomial-coefficient", _status(value, 12), clk.elapsed))
    with _Clock() as clk:
        mapped = {tuple(sorted((reference_to_layout(a), reference_to_layout(b))))
                  for a, b in REFERENCE_EDGES_FIXED}
        same = mapped == set(g.edges)
    rows.append(Row("appendix-coeff", "P4 +T P4 edge set vs program list (20-22 read as 20-27)",
                    g.n, g.m, same, True, "edge-set-compare", _status(same, True), clk.elapsed))
    literal = Graph.from_edges(28, [(a - 1, b - 1) for a, b in REFERENCE_EDGES])
    with _Clock() as clk:
        value = monomial_coefficient(literal, [2] * 28)
    rows.append(Row("appendix-coeff", "program edge list verbatim", literal.n, literal.m, value, 12,
                    "monomial-coefficient", _status(value, 12), clk.elapsed))
    return rows


_RUNNERS = {
    "cor-3.3": _cor_3_3, "cor-3.4": _cor_3_4, "cor-3.5": _cor_3_5,
    "cor-3.7": _cor_3_7, "cor-3.9": _cor_3_9, "cor-3.11": _cor_3_11,
    "thm-1": _thm("S"), "thm-2": _thm("R"), "thm-3": _thm("Q"), "thm-4": _thm("T"),
    "thm-5": _thm_5, "thm-6": _thm_6,
    "lemma-2.2": _bipartite_formula, "lemma-2.4": _at_two_census, "appendix-coeff": _reference_coefficient,
}


def run_repro(target: str, nmax: Optional[int] = None, mmax: Optional[int] = None,
              seed: int = 0, budget: int = SEARCH_BUDGET) -> Report:
    if target not in _RUNNERS:
        raise ValueError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    dn, dm = DEFAULT_RANGES.get(target, (None, None))
    kwargs = dict(nmax=nmax or dn, mmax=mmax or dm, seed=seed, budget=budget)
    return Report(target, _RUNNERS[target](**kwargs))


def run_all(**kwargs) -> List[Report]:
    return [run_repro(t, **kwargs) for t in TARGETS]


def format_table(reports) -> str:
    lines = []
    for rep in reports:
        c = rep.counts()
        lines.append(f"== {rep.target}: {'PASS' if rep.passed else 'FAIL'} "
                     f"({c['pass']} pass, {c['fail']} fail, {c['inconclusive']} inconclusive)")
        for r in rep.rows:
            lines.append(f"  [{r.status:>12}] {r.instance:<48} |V|={r.vertices:<4} |E|={r.edges:<5}"
                         f" got={r.computed!s:<6} want={r.expected!s:<6} {r.method}"
                         f"{'  ' + r.note if r.note else ''}")
    return "\n".join(lines)


def exit_code(reports) -> int:
    statuses = {r.status for rep in reports for r in rep.rows}
    if "fail" in statuses:
        return 1
    if "inconclusive" in statuses:
        return 2
    return 0
