"""
Command-line front end.

Every verb reads graphs as JSON or plain edge lists (auto-detected, ``-`` for
stdin) and writes JSON to stdout, except ``dot`` which writes DOT text.

    atgraph gen theta 2 2 4
    atgraph fsum --op T P4.json P4.json --emit-dot
    atgraph coeff g.json --targets all:2
    atgraph at-exact g.json --budget 100000
    atgraph reproduce --target all --table
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import io
from .at import (Certificate, Orientation, at_exact, at_lower_bound, at_upper_bound,
                 eulerian_diff, monomial_coefficient, orient_by_order,
                 s_sum_orientation, subdivision_orientation, verify_certificate)
from .errors import BudgetExceeded, GraphError, TooLarge
from .graph import Complete, Cycle, Path, Star, Theta, build, degree_profile, generate
from .repro import TARGETS, exit_code, format_table, run_repro
from .structure import (at_equals_two, chromatic_number, classify_core, core,
                        elimination_order, max_density, two_choosable)
from .transforms import FKind, apply_op, f_sum

FAMILIES = {"path": Path, "cycle": Cycle, "star": Star, "complete": Complete, "theta": Theta}


def _read(source):
    if source == "-":
        return sys.stdin.read()
    with open(source) as fh:
        return fh.read()


def _load(source, fmt="auto"):
    return io.parse_graph(_read(source), fmt)


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _emit_graph(g, args):
    if getattr(args, "emit_dot", False):
        sys.stdout.write(io.emit_dot(g))
    else:
        print(io.to_json(g, indent=2))


def _parse_targets(text, n):
    if text.startswith("all:"):
        return [int(text[4:])] * n
    return [int(t) for t in text.replace(",", " ").split()]


def _parse_arcs(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = json.loads(_read(text))
    if isinstance(data, dict):
        data = data["arcs"]
    return [tuple(a) for a in data]


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_gen(args):
    cls = FAMILIES[args.family]
    _emit_graph(generate(cls(*args.params)), args)


def cmd_build(args):
    if args.source is not None:
        g = _load(args.source, args.format)
    else:
        pairs = [tuple(int(x) for x in tok.split("-")) for tok in args.edges.split(",") if tok]
        g = build(args.n, pairs)
    if args.edgelist:
        sys.stdout.write(io.to_edgelist(g))
    else:
        _emit_graph(g, args)


def cmd_transform(args):
    _emit_graph(apply_op(_load(args.graph), args.op), args)


def cmd_fsum(args):
    _emit_graph(f_sum(_load(args.graph), _load(args.partner), args.op), args)


def cmd_degeneracy(args):
    g = _load(args.graph)
    d, order = elimination_order(g)
    prof = degree_profile(g)
    _emit({"degeneracy": d, "coloring_number": d + 1, "elimination_order": list(order),
           "min_degree": prof.min_degree, "max_degree": prof.max_degree})


def cmd_core(args):
    _emit_graph(core(_load(args.graph)), args)


def cmd_classify(args):
    c = classify_core(_load(args.graph))
    _emit({"class": c.kind, "param": c.param})


def cmd_at2(args):
    _emit({"at_equals_two": at_equals_two(_load(args.graph))})


def cmd_choosable2(args):
    _emit({"two_choosable": two_choosable(_load(args.graph))})


def cmd_chromatic(args):
    _emit({"chromatic_number": chromatic_number(_load(args.graph), limit=args.limit)})


def cmd_density(args):
    d = max_density(_load(args.graph))
    _emit({"density": str(d), "ceil": d.ceil, "witness": list(d.witness),
           "density_lower_bound": d.ceil + 1})


def _orientation_for(g, args):
    if args.arcs:
        return Orientation.from_arcs(g, _parse_arcs(args.arcs))
    return orient_by_order(g, range(g.n))


def cmd_diff(args):
    g = _load(args.graph)
    r = eulerian_diff(_orientation_for(g, args), limit=args.limit)
    _emit({"even": r.even, "odd": r.odd, "diff": r.diff})


def cmd_coeff(args):
    g = _load(args.graph)
    targets = _parse_targets(args.targets, g.n)
    _emit({"targets": targets, "coefficient": monomial_coefficient(g, targets)})


def cmd_at_exact(args):
    g = _load(args.graph)
    try:
        k, cert = at_exact(g, budget=args.budget)
    except BudgetExceeded as exc:
        _emit({"status": "budget-exceeded", "lower": exc.lower, "upper": exc.upper})
        return 2
    _emit({"status": "exact", "at": k, "certificate": cert.to_json_obj()})


def cmd_at_bounds(args):
    g = _load(args.graph)
    d, _ = elimination_order(g)
    dens = max_density(g) if g.n else None
    try:
        chi = chromatic_number(g)
    except TooLarge:
        chi = None
    _emit({"lower": at_lower_bound(g), "upper": at_upper_bound(g).k, "degeneracy": d,
           "density": str(dens) if dens else None, "chromatic_number": chi})


def cmd_certify(args):
    g = _load(args.graph)
    if args.method == "degeneracy":
        target, cert = g, at_upper_bound(g)
    elif args.method == "subdivision":
        target, cert = apply_op(g, "S"), subdivision_orientation(g)
    else:
        if args.partner is None:
            raise SystemExit("certify --method ssum needs --partner H")
        h = _load(args.partner)
        _, cert_h = at_exact(h, budget=args.budget)
        target = f_sum(g, h, "S")
        cert = s_sum_orientation(g, h, cert_h.orientation(h), limit=args.limit)
    _emit({"graph": io.to_json_obj(target), "certificate": cert.to_json_obj()})


def cmd_verify(args):
    g = _load(args.graph)
    obj = json.loads(_read(args.cert))
    if "certificate" in obj:
        obj = obj["certificate"]
    ok = verify_certificate(g, Certificate.from_json_obj(obj))
    _emit({"valid": ok})
    return 0 if ok else 1


def cmd_reproduce(args):
    targets = TARGETS if args.target == "all" else (args.target,)
    reports = [run_repro(t, nmax=args.nmax, mmax=args.mmax, seed=args.seed, budget=args.budget)
               for t in targets]
    if args.json:
        _emit([r.to_json_obj(timing=not args.no_timing) for r in reports])
    else:
        print(format_table(reports))
    return exit_code(reports)


def cmd_dot(args):
    g = _load(args.graph)
    arcs = None
    if args.cert:
        obj = json.loads(_read(args.cert))
        arcs = (obj.get("certificate") or obj)["arcs"]
    sys.stdout.write(io.emit_dot(g, arcs=arcs))


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="atgraph", description=__doc__.splitlines()[1])
    p.add_argument("--seed", type=int, default=0, help="seed for randomised corpora")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, graph=True, dot=False):
        sp = sub.add_parser(name)
        sp.set_defaults(fn=fn)
        if graph:
            sp.add_argument("graph", help="graph file (JSON or edge list), '-' for stdin")
        if dot:
            sp.add_argument("--emit-dot", action="store_true")
        return sp

    sp = verb("gen", cmd_gen, graph=False, dot=True)
    sp.add_argument("family", choices=sorted(FAMILIES))
    sp.add_argument("params", type=int, nargs="+")

    sp = verb("build", cmd_build, graph=False, dot=True)
    sp.add_argument("source", nargs="?")
    sp.add_argument("--format", choices=("auto", "json", "edgelist"), default="auto")
    sp.add_argument("--n", type=int)
    sp.add_argument("--edges", default="", help="comma list like 0-1,1-2")
    sp.add_argument("--edgelist", action="store_true", help="write edge-list text instead of JSON")

    sp = verb("transform", cmd_transform, dot=True)
    sp.add_argument("--op", required=True, choices=[k.value for k in FKind])

    sp = verb("fsum", cmd_fsum, dot=True)
    sp.add_argument("partner")
    sp.add_argument("--op", required=True, choices=[k.value for k in FKind])

    verb("degeneracy", cmd_degeneracy)
    verb("core", cmd_core, dot=True)
    verb("classify", cmd_classify)
    verb("at2", cmd_at2)
    verb("choosable2", cmd_choosable2)
    sp = verb("chromatic", cmd_chromatic)
    sp.add_argument("--limit", type=int, default=64)
    verb("density", cmd_density)

    sp = verb("diff", cmd_diff)
    sp.add_argument("--arcs", help="JSON list of [tail, head] or a file holding one")
    sp.add_argument("--limit", type=int, default=64)

    sp = verb("coeff", cmd_coeff)
    sp.add_argument("--targets", required=True, help="'2,2,1,...' or 'all:2'")

    sp = verb("at-exact", cmd_at_exact)
    sp.add_argument("--budget", type=int, default=2_000_000)

    verb("at-bounds", cmd_at_bounds)

    sp = verb("certify", cmd_certify)
    sp.add_argument("--method", required=True, choices=("degeneracy", "subdivision", "ssum"))
    sp.add_argument("--partner")
    sp.add_argument("--budget", type=int, default=2_000_000)
    sp.add_argument("--limit", type=int, default=40)

    sp = verb("verify", cmd_verify)
    sp.add_argument("cert")

    sp = verb("reproduce", cmd_reproduce, graph=False)
    sp.add_argument("--target", default="all", choices=("all",) + TARGETS)
    sp.add_argument("--nmax", type=int)
    sp.add_argument("--mmax", type=int)
    sp.add_argument("--budget", type=int, default=2_000_000)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--table", action="store_true")
    sp.add_argument("--no-timing", action="store_true", help="omit elapsed times from JSON")

    sp = verb("dot", cmd_dot)
    sp.add_argument("--cert", help="certificate JSON; draws the orientation")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    random.seed(args.seed)
    try:
        rc = args.fn(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
