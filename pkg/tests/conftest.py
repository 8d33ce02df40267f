import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from atgraph import Graph  # noqa: E402


def random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_graph_max_edges(rng, n, max_edges):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    k = rng.randint(0, min(max_edges, len(pairs)))
    return Graph.from_edges(n, rng.sample(pairs, k))


@pytest.fixture
def rng():
    return random.Random(20240611)


_CRITERIA = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        cid, title = mark.args
        param = item.callspec.id if hasattr(item, "callspec") else ""
        label = f"{title} [{param}]" if param else title
        _CRITERIA.append((cid, label, "PASS" if rep.passed else "FAIL", rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for cid, label, status, secs in _CRITERIA:
        terminalreporter.write_line(f"criterion {cid:<3} {status}  {label}  ({secs:.2f}s)")
