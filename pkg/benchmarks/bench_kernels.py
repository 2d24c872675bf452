"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from kbalance import _fallback, grotzsch_graph, petersen_graph, cycle_graph, complete_bipartite_graph
from kbalance.graphs import simple_cycles
from kbalance.orient import k_balanced_orientations, poset_of

try:
    from kbalance import _speedups
except ImportError:
    _speedups = None


def _graph_args(g):
    edges = [(i - 1, j - 1) for i, j in g.edges]
    cycles = [[v - 1 for v in c] for c in simple_cycles(g)]
    return edges, cycles


def _poset_args():
    # a mid-sized poset: induced by the first 2-balanced orientation of C_8
    g = cycle_graph(8)
    o = k_balanced_orientations(g, 2)[0]
    p = poset_of(o)
    flat = [0] * (p.n * p.n)
    for i, j in p.less:
        flat[(i - 1) * p.n + (j - 1)] = 1
    return p.n, flat


CASES = [
    ("census K_{3,3} k=2", "coloring_census", lambda: (6, *_graph_args(complete_bipartite_graph(3, 3)), 2)),
    ("census C_7 k=2", "coloring_census", lambda: (7, *_graph_args(cycle_graph(7)), 2)),
    ("census Petersen k=2", "coloring_census", lambda: (10, *_graph_args(petersen_graph()), 2)),
    ("orientations Grotzsch k=2", "orientation_search", lambda: (*_graph_args(grotzsch_graph()), 2)),
    ("orientations Petersen k=2", "orientation_search", lambda: (*_graph_args(petersen_graph()), 2)),
    ("linear extensions C_8 poset", "linear_extension_census", lambda: _poset_args()),
]


def timed(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=1)
    ap.add_argument("--full", action="store_true",
                    help="include the Petersen census (hours in pure Python)")
    ns = ap.parse_args()

    print(f"{'case':<32} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, kernel, make_args in CASES:
        if not ns.full and "census Petersen" in label:
            continue
        args = make_args()
        t_py, r_py = timed(getattr(_fallback, kernel), args, ns.repeat)
        if _speedups is None:
            print(f"{label:<32} {t_py:>9.3f}s {'n/a':>10} {'n/a':>8}")
            continue
        t_cy, r_cy = timed(getattr(_speedups, kernel), args, ns.repeat)
        assert r_py == r_cy, f"kernel disagreement on {label}"
        print(f"{label:<32} {t_py:>9.3f}s {t_cy:>9.3f}s {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
