"""Command-line front end.

Subcommands:
  compute       X^k_G in the M or L basis, by either computation path
  polynomial    chi^k_G with optional exact evaluations (negative ok)
  orientations  count or list the k-balanced orientations
  verify        run the built-in cross-validation suites

Graph input: --generator "name[:p1[,p2]]", --graph6 STRING, or
--edge-list FILE ("n m" header then one "i j" pair per line).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import chromatic, graphs, orient, qsym
from .errors import KBalanceError
from .qsym import FUNDAMENTAL, MONOMIAL


def _add_graph_args(p: argparse.ArgumentParser, positional: bool = True):
    if positional:
        p.add_argument(
            "graph",
            nargs="?",
            help="generator spec like cycle:4 (shorthand for --generator)",
        )
    src = p.add_argument_group("graph source")
    src.add_argument("--generator", help='generator spec, e.g. "cycle:4" or "complete_bipartite:3,3"')
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--edge-list", help="path to an edge-list file")
    p.add_argument("--max-cycles", type=int, default=graphs.DEFAULT_CYCLE_CAP,
                   help="abort if the graph has more simple cycles than this")
    p.add_argument("--node-budget", type=int, default=orient.DEFAULT_NODE_BUDGET,
                   help="abort if a backtracking search visits more nodes than this")


def _resolve_graph(args) -> graphs.Graph:
    sources = [s for s in (getattr(args, "graph", None), args.generator, args.graph6, args.edge_list) if s]
    if len(sources) != 1:
        raise KBalanceError("exactly one graph source is required")
    if getattr(args, "graph", None):
        return graphs.parse_generator_spec(args.graph)
    if args.generator:
        return graphs.parse_generator_spec(args.generator)
    if args.graph6:
        return graphs.from_graph6(args.graph6)
    with open(args.edge_list) as fh:
        return graphs.parse_edge_list_text(fh.read())


def cmd_compute(args) -> int:
    g = _resolve_graph(args)
    if args.path == "colorings":
        F = chromatic.xk_via_colorings(g, args.k, args.max_cycles, args.node_budget)
        if args.basis == "L":
            F = qsym.m_to_l(F)
    else:
        F = chromatic.xk_via_orientations(g, args.k, args.max_cycles, args.node_budget)
        if args.basis == "M":
            F = qsym.l_to_m(F)
    if args.format == "json":
        print(json.dumps(F.to_structured()))
    else:
        print(F)
    return 0


def cmd_polynomial(args) -> int:
    g = _resolve_graph(args)
    p = chromatic.chi_k(g, args.k, args.max_cycles, args.node_budget)
    if args.format == "json":
        doc = {"polynomial": p.to_structured()}
        doc["evaluations"] = [
            [lam, qsym.evaluate(p, lam).numerator, qsym.evaluate(p, lam).denominator]
            for lam in args.eval
        ]
        print(json.dumps(doc))
    else:
        print(p)
        for lam in args.eval:
            v = qsym.evaluate(p, lam)
            text = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
            print(f"chi({lam}) = {text}")
    return 0


def cmd_orientations(args) -> int:
    g = _resolve_graph(args)
    os_ = orient.k_balanced_orientations(
        g, args.k, node_budget=args.node_budget, cycle_cap=args.max_cycles
    )
    if args.list:
        for o in os_:
            print(o.serialize())
    else:
        print(len(os_))
    return 0


# -- verify suites -----------------------------------------------------------


def _valid_ks(g: graphs.Graph, forest_cap: int = 2) -> list[int]:
    gi = graphs.girth(g)
    if gi == float("inf"):
        return list(range(1, forest_cap + 1))
    return list(range(1, int(gi) // 2 + 1))


def _suite_oracle(args, report) -> bool:
    ok = True
    for n in range(1, args.max_n + 1):
        for g in graphs.all_connected_graphs(n):
            for k in _valid_ks(g):
                lhs = qsym.l_to_m(chromatic.xk_via_orientations(g, k))
                rhs = chromatic.xk_via_colorings(g, k)
                if lhs.coeffs != rhs.coeffs:
                    report(False, f"oracle n={n} graph={graphs.to_graph6(g)} k={k}")
                    ok = False
        report(True, f"oracle: two-path equivalence, all connected graphs n={n}")
    if args.random_n6:
        rng = random.Random(20260824)
        for t in range(args.random_n6):
            g = graphs.random_connected_graph(6, rng)
            for k in _valid_ks(g):
                lhs = qsym.l_to_m(chromatic.xk_via_orientations(g, k))
                rhs = chromatic.xk_via_colorings(g, k)
                if lhs.coeffs != rhs.coeffs:
                    report(False, f"oracle random n=6 #{t} graph={graphs.to_graph6(g)} k={k}")
                    ok = False
        report(True, f"oracle: {args.random_n6} random connected graphs on 6 vertices")
    return ok


def _suite_cycle_formula(args, report) -> bool:
    ok = True
    for n in range(3, args.max_n + 1):
        closed = chromatic.xk_cycle_closed_form(n)
        brute = chromatic.xk_via_colorings(graphs.cycle_graph(n), 2)
        good = closed.coeffs == brute.coeffs
        ok &= good
        report(good, f"cycle-formula: C_{n} closed form equals brute force")
    return ok


def _suite_cycle_symmetry(args, report) -> bool:
    ok = True
    for n in range(3, args.max_n + 1):
        for k in range(1, n // 2 + 1):
            good = qsym.is_symmetric(chromatic.xk_via_colorings(graphs.cycle_graph(n), k))
            ok &= good
            report(good, f"cycle-symmetry: X^{k} of C_{n} is symmetric")
    return ok


def _suite_bipartite_formula(args, report) -> bool:
    ok = True
    for m, n in [(1, 2), (2, 2), (2, 3), (3, 3), (2, 4)]:
        closed = chromatic.xk_complete_bipartite_closed_form(m, n)
        brute = chromatic.xk_via_colorings(graphs.complete_bipartite_graph(m, n), 2)
        good = closed.coeffs == brute.coeffs
        ok &= good
        report(good, f"bipartite-formula: K_{{{m},{n}}} closed form equals brute force")
    return ok


def _suite_reciprocity(args, report) -> bool:
    ok = True
    for n in range(1, args.max_n + 1):
        for g in graphs.all_connected_graphs(n):
            for k in _valid_ks(g):
                p = chromatic.chi_k(g, k)
                sign = -1 if n % 2 else 1
                for lam in range(1, args.max_lambda + 1):
                    expected = sign * qsym.evaluate(p, -lam)
                    got = Fraction(chromatic.reciprocity_pairs(g, k, lam))
                    if expected != got:
                        report(False, f"reciprocity n={n} graph={graphs.to_graph6(g)} k={k} lam={lam}")
                        ok = False
        report(True, f"reciprocity: pair counts match (-1)^n chi^k(-lam), n={n}, lam<={args.max_lambda}")
    return ok


SUITES = {
    "oracle": _suite_oracle,
    "cycle-formula": _suite_cycle_formula,
    "cycle-symmetry": _suite_cycle_symmetry,
    "bipartite-formula": _suite_bipartite_formula,
    "reciprocity": _suite_reciprocity,
}


_SUITE_DEFAULT_MAX_N = {
    "oracle": 5,
    "cycle-formula": 7,
    "cycle-symmetry": 8,
    "bipartite-formula": 0,  # suite uses a fixed (m, n) list
    "reciprocity": 4,
}


def cmd_verify(args) -> int:
    failures = 0

    def report(good: bool, label: str):
        nonlocal failures
        print(("PASS " if good else "FAIL ") + label)
        if not good:
            failures += 1

    names = list(SUITES) if args.suite == "all" else [args.suite]
    requested_max_n = args.max_n
    for name in names:
        args.max_n = requested_max_n if requested_max_n is not None else _SUITE_DEFAULT_MAX_N[name]
        SUITES[name](args, report)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kbalance", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute X^k_G")
    _add_graph_args(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--basis", choices=["M", "L"], default="L")
    p.add_argument("--path", choices=["orientations", "colorings"], default="orientations")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("polynomial", help="compute chi^k_G")
    _add_graph_args(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--eval", type=int, action="append", default=[],
                   help="evaluate at this integer (repeatable; negative allowed)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_polynomial)

    p = sub.add_parser("orientations", help="count or list k-balanced orientations")
    _add_graph_args(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=cmd_orientations)

    p = sub.add_parser("verify", help="run a cross-validation suite")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-lambda", type=int, default=3)
    p.add_argument("--random-n6", type=int, default=0,
                   help="additionally spot-check this many random 6-vertex graphs (oracle suite)")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except KBalanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
