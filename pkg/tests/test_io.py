import json

import pytest
from hypothesis import given, settings, strategies as st

from atgraph import Graph, complete, cycle, f_sum, path, subdivision
from atgraph.errors import DuplicateEdge, OutOfRange, ParseError, SelfLoop
from atgraph.io import (canonical_json, emit_dot, from_json_obj, graph_sha, parse_graph,
                        to_edgelist, to_json)


def test_edgelist_path():
    assert parse_graph("3 2\n0 1\n1 2") == path(3)


def test_json_k1():
    g = parse_graph('{"n": 1, "edges": []}')
    assert (g.n, g.m) == (1, 0)


def test_edgelist_self_loop_reports_line():
    with pytest.raises(SelfLoop) as info:
        parse_graph("2 1\n0 0")
    assert info.value.line == 2


def test_edgelist_duplicate_reports_line():
    with pytest.raises(DuplicateEdge) as info:
        parse_graph("3 3\n0 1\n1 2\n\n2 1\n")
    assert info.value.line == 5


def test_edgelist_out_of_range():
    with pytest.raises(OutOfRange):
        parse_graph("2 1\n0 2")


@pytest.mark.parametrize("text, line", [
    ("", 1), ("3\n", 1), ("3 2\n0 1\n", 2), ("2 1\n0 x\n", 2), ("2 1\n0 1 1\n", 2),
])
def test_edgelist_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text, "edgelist")
    assert info.value.line == line


def test_bad_json():
    with pytest.raises(ParseError):
        parse_graph('{"n": 2, "edges": [[0, 1]')
    with pytest.raises(ParseError):
        parse_graph('{"edges": []}')


def test_json_is_canonical():
    g = Graph.from_edges(3, [(2, 1), (1, 0)])
    assert canonical_json(g) == '{"edges":[[0,1],[1,2]],"n":3}'


def test_hash_ignores_labels_and_input_order():
    a = Graph.from_edges(4, [(0, 1), (2, 3), (1, 2)])
    b = parse_graph('{"n": 4, "edges": [[3, 2], [1, 2], [1, 0]]}')
    assert graph_sha(a) == graph_sha(b)
    assert graph_sha(subdivision(path(2))) == graph_sha(Graph.from_edges(3, [(0, 2), (1, 2)]))
    assert graph_sha(path(3)) != graph_sha(cycle(3))


@pytest.mark.parametrize("g", [path(1), cycle(5), complete(4), subdivision(complete(4)),
                               f_sum(path(3), cycle(3), "T")])
def test_json_round_trip_keeps_labels(g):
    assert parse_graph(to_json(g)) == g
    assert from_json_obj(json.loads(to_json(g))).labels == g.labels


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                        .filter(lambda e: e[0] != e[1]).map(lambda e: (min(e), max(e)))))))
def test_round_trips(data):
    n, edges = data
    g = Graph.from_edges(n, edges)
    assert parse_graph(to_edgelist(g)) == g
    assert parse_graph(to_json(g)) == g


def test_dot_path():
    text = emit_dot(path(4))
    assert text.startswith("graph G {")
    assert text.count("[label=") == 4
    assert text.count(" -- ") == 3


def test_dot_subdivision_labels():
    text = emit_dot(subdivision(path(4)))
    assert text.count("[label=") == 7
    assert text.count("shape=box") == 3
    assert 'label="4: e0-1"' in text


def test_dot_fsum_node_count_and_determinism():
    g = f_sum(cycle(3), cycle(3), "S")
    text = emit_dot(g)
    assert text.count("[label=") == 18
    assert text == emit_dot(g)


def test_dot_orientation():
    text = emit_dot(path(3), arcs=[(1, 0), (2, 1)])
    assert text.startswith("digraph")
    assert "1 -> 0;" in text
