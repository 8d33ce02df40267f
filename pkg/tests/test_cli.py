import json

import pytest

from atgraph.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def test_gen_and_transform(capsys, files):
    rc, out, _ = run(capsys, "gen", "path", "4")
    assert rc == 0
    p4 = files("p4.json", out)
    rc, out, _ = run(capsys, "transform", p4, "--op", "T")
    g = json.loads(out)
    assert (g["n"], len(g["edges"])) == (7, 11)


def test_fsum_and_coeff(capsys, files):
    _, out, _ = run(capsys, "gen", "path", "4")
    p4 = files("p4.json", out)
    _, out, _ = run(capsys, "fsum", p4, p4, "--op", "T")
    g = files("g.json", out)
    rc, out, _ = run(capsys, "coeff", g, "--targets", "all:2")
    assert rc == 0 and json.loads(out)["coefficient"] == 12


def test_build_edgelist(capsys, files):
    rc, out, _ = run(capsys, "build", "--n", "3", "--edges", "0-1,1-2", "--edgelist")
    assert rc == 0 and out.splitlines()[0] == "3 2"


def test_build_error_exit(capsys, files):
    bad = files("bad.txt", "2 1\n0 0\n")
    rc, _, err = run(capsys, "build", bad)
    assert rc == 3 and "line 2" in err


def test_missing_file(capsys):
    rc, _, err = run(capsys, "degeneracy", "/nonexistent/graph.json")
    assert rc == 3


def test_structure_verbs(capsys, files):
    _, out, _ = run(capsys, "gen", "theta", "2", "2", "4")
    t = files("t.json", out)
    assert json.loads(run(capsys, "degeneracy", t)[1])["degeneracy"] == 2
    assert json.loads(run(capsys, "classify", t)[1]) == {"class": "Theta222m", "param": 2}
    assert json.loads(run(capsys, "at2", t)[1])["at_equals_two"] is False
    assert json.loads(run(capsys, "choosable2", t)[1])["two_choosable"] is True
    assert json.loads(run(capsys, "chromatic", t)[1])["chromatic_number"] == 2
    assert json.loads(run(capsys, "density", t)[1])["density"] == "8/7"
    core = json.loads(run(capsys, "core", t)[1])
    assert core["n"] == 7


def test_at_verbs_and_verify(capsys, files):
    _, out, _ = run(capsys, "gen", "cycle", "5")
    c5 = files("c5.json", out)
    rc, out, _ = run(capsys, "at-exact", c5)
    res = json.loads(out)
    assert rc == 0 and res["at"] == 3
    cert = files("cert.json", json.dumps(res["certificate"]))
    rc, out, _ = run(capsys, "verify", c5, cert)
    assert rc == 0 and json.loads(out)["valid"]
    bounds = json.loads(run(capsys, "at-bounds", c5)[1])
    assert (bounds["lower"], bounds["upper"]) == (3, 3)
    rc, out, _ = run(capsys, "dot", c5, "--cert", cert)
    assert out.startswith("digraph")


def test_at_exact_budget(capsys, files):
    _, out, _ = run(capsys, "gen", "path", "3")
    p3 = files("p3.json", out)
    _, out, _ = run(capsys, "gen", "path", "2")
    p2 = files("p2.json", out)
    _, out, _ = run(capsys, "fsum", p3, p2, "--op", "T")
    g = files("g.json", out)
    rc, out, _ = run(capsys, "at-exact", g, "--budget", "1")
    assert rc == 2 and json.loads(out)["status"] == "budget-exceeded"


def test_diff_verb(capsys, files):
    c4 = files("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n")
    rc, out, _ = run(capsys, "diff", c4, "--arcs", "[[0,1],[1,2],[2,3],[3,0]]")
    assert json.loads(out) == {"even": 2, "odd": 0, "diff": 2}


def test_certify_methods(capsys, files):
    _, out, _ = run(capsys, "gen", "complete", "4")
    k4 = files("k4.json", out)
    _, out, _ = run(capsys, "certify", k4, "--method", "subdivision")
    obj = json.loads(out)
    assert obj["certificate"]["k"] == 3
    s = files("s.json", json.dumps(obj["graph"]))
    c = files("c.json", out)
    assert run(capsys, "verify", s, c)[0] == 0
    _, out, _ = run(capsys, "gen", "path", "2")
    p2 = files("p2.json", out)
    _, out, _ = run(capsys, "gen", "cycle", "3")
    c3 = files("c3.json", out)
    _, out, _ = run(capsys, "certify", p2, "--method", "ssum", "--partner", c3)
    assert json.loads(out)["certificate"]["diff"] != 0


def test_verify_wrong_graph(capsys, files):
    _, out, _ = run(capsys, "gen", "cycle", "5")
    c5 = files("c5.json", out)
    _, out, _ = run(capsys, "gen", "cycle", "4")
    c4 = files("c4.json", out)
    _, out, _ = run(capsys, "certify", c4, "--method", "degeneracy")
    cert = files("cert.json", out)
    assert run(capsys, "verify", c5, cert)[0] == 3


def test_reproduce_json_deterministic(capsys):
    args = ("--seed", "3", "reproduce", "--target", "lemma-2.2", "--json", "--no-timing")
    rc1, out1, _ = run(capsys, *args)
    rc2, out2, _ = run(capsys, *args)
    assert rc1 == rc2 == 0 and out1 == out2


def test_reproduce_table(capsys):
    rc, out, _ = run(capsys, "reproduce", "--target", "thm-2", "--table")
    assert rc == 0 and out.startswith("== thm-2: PASS")


def test_reproduce_failing_target_exit(capsys):
    rc, out, _ = run(capsys, "reproduce", "--target", "thm-5", "--nmax", "3")
    assert rc == 1 and "FAIL" in out


def test_gen_invalid(capsys):
    rc, _, err = run(capsys, "gen", "cycle", "2")
    assert rc == 3


def test_emit_dot_flag(capsys):
    rc, out, _ = run(capsys, "gen", "path", "4", "--emit-dot")
    assert out.startswith("graph G {") and out.count(" -- ") == 3
