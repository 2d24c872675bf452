"""Pure-Python kernels for the three hot inner loops.

Same contracts as the compiled extension in _speedups.pyx; selected at
import time by kernels.py when the extension is unavailable (or when
KBALANCE_PURE_PYTHON is set).  All vertex/edge indices here are 0-based;
callers translate.
"""

from __future__ import annotations

from .errors import SearchBudgetExceeded

BACKEND = "python"


def _cycle_plan(n, edges, cycles, k):
    """Shared precomputation for the balance-pruned searches.

    Returns (sizes, slack, edge_hits) where slack[j] = len(cycle j) - k is
    the largest number of edges that may agree with one traversal
    direction, and edge_hits maps a canonical edge (i, j), i < j, to the
    list of (cycle_index, low_to_high_agrees_with_traversal) pairs.
    """
    sizes = [len(c) for c in cycles]
    slack = [r - k for r in sizes]
    edge_hits = {tuple(sorted(e)): [] for e in edges}
    for ci, cyc in enumerate(cycles):
        r = len(cyc)
        for t in range(r):
            a, b = cyc[t], cyc[(t + 1) % r]
            edge_hits[(min(a, b), max(a, b))].append((ci, a < b))
    return sizes, slack, edge_hits


def coloring_census(n, edges, cycles, k, node_budget=None):
    """Census of k-balanced proper colorings, bucketed by composition type.

    Enumerates colorings onto initial color segments [1..l] by choosing
    the color classes in increasing color order: each class is a nonempty
    independent subset of the remaining vertices.  Edges from earlier
    classes to the new class point toward the new class, so per-cycle
    forward/backward counters update as classes are placed and a branch
    is pruned as soon as one counter exceeds len(cycle) - k.  Returns
    {composition_type: count}.
    """
    if n == 0:
        return {(): 1}
    _, slack, edge_hits = _cycle_plan(n, edges, cycles, k)
    adj_mask = [0] * n
    for a, b in edges:
        adj_mask[a] |= 1 << b
        adj_mask[b] |= 1 << a
    # cycle hits of the canonical edge (lo, hi): (lo, ci, traversal goes lo->hi)
    hits_of = [[] for _ in range(n)]
    for (lo, hi), hits in edge_hits.items():
        for ci, agrees in hits:
            hits_of[hi].append((lo, ci, agrees))
            hits_of[lo].append((hi, ci, not agrees))

    fwd = [0] * len(cycles)
    bwd = [0] * len(cycles)
    parts: list[int] = []
    census: dict[tuple[int, ...], int] = {}
    nodes = 0
    full = (1 << n) - 1

    def place_class(remaining, assigned):
        nonlocal nodes
        sub = remaining & -remaining  # nonempty submasks, ascending
        while True:
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise SearchBudgetExceeded(
                    f"coloring census exceeded node budget {node_budget}"
                )
            ok = all(adj_mask[v] & sub == 0 for v in _bits(sub))
            touched = []
            if ok:
                # edges from assigned into the new class complete now,
                # directed toward the new (larger) color
                for v in _bits(sub):
                    for u, ci, agrees_toward_v in hits_of[v]:
                        if assigned >> u & 1:
                            if agrees_toward_v:
                                fwd[ci] += 1
                                touched.append((ci, True))
                                if fwd[ci] > slack[ci]:
                                    ok = False
                            else:
                                bwd[ci] += 1
                                touched.append((ci, False))
                                if bwd[ci] > slack[ci]:
                                    ok = False
                    if not ok:
                        break
            if ok:
                parts.append(bin(sub).count("1"))
                rest = remaining & ~sub
                if rest == 0:
                    key = tuple(parts)
                    census[key] = census.get(key, 0) + 1
                else:
                    place_class(rest, assigned | sub)
                parts.pop()
            for ci, was_fwd in touched:
                if was_fwd:
                    fwd[ci] -= 1
                else:
                    bwd[ci] -= 1
            if sub == remaining:
                return
            sub = (sub - remaining) & remaining

    place_class(full, 0)
    return census


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def orientation_search(edges, cycles, k, node_budget=None):
    """All k-balanced orientations as edge-direction bitmasks, ascending.

    Bit e clear means edge e is directed low-to-high.  Backtracks edge by
    edge keeping per-cycle forward/backward counters; a branch dies as
    soon as one counter exceeds len(cycle) - k.
    """
    m = len(edges)
    _, slack, edge_hits = _cycle_plan(0, edges, cycles, k)
    per_edge = [edge_hits[tuple(sorted(e))] for e in edges]
    # Complete short cycles early: visit edges in order of the shortest
    # cycle containing them (performance only; output order is canonical).
    order = sorted(
        range(m),
        key=lambda e: (min((slack[ci] for ci, _ in per_edge[e]), default=1 << 30), e),
    )
    fwd = [0] * len(cycles)
    bwd = [0] * len(cycles)
    results = []
    nodes = 0

    def place(t, mask):
        nonlocal nodes
        if t == m:
            results.append(mask)
            return
        e = order[t]
        for bit in (0, 1):
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise SearchBudgetExceeded(
                    f"orientation search exceeded node budget {node_budget}"
                )
            touched = []
            ok = True
            for ci, agrees in per_edge[e]:
                if (bit == 0) == agrees:
                    fwd[ci] += 1
                    touched.append((ci, True))
                    if fwd[ci] > slack[ci]:
                        ok = False
                        break
                else:
                    bwd[ci] += 1
                    touched.append((ci, False))
                    if bwd[ci] > slack[ci]:
                        ok = False
                        break
            if ok:
                place(t + 1, mask | (bit << e))
            for ci, was_fwd in touched:
                if was_fwd:
                    fwd[ci] -= 1
                else:
                    bwd[ci] -= 1

    if any(s < k for s in slack):  # some cycle shorter than 2k: nothing to find
        return []
    place(0, 0)
    results.sort()
    return results


def linear_extension_census(n, less):
    """Ascent-composition census over all linear extensions.

    less is an n*n flat 0/1 sequence with less[i*n+j] = 1 iff i < j in the
    (naturally labelled) poset.  Returns {composition_parts: count} where
    the composition records maximal decreasing runs of each extension.
    """
    if n == 0:
        return {(): 1}
    preds = [sum(less[i * n + v] for i in range(n)) for v in range(n)]
    perm = [0] * n
    placed = [False] * n
    census: dict[tuple[int, ...], int] = {}

    def extend(pos):
        if pos == n:
            parts = []
            run = 1
            for t in range(n - 1):
                if perm[t] < perm[t + 1]:
                    parts.append(run)
                    run = 1
                else:
                    run += 1
            parts.append(run)
            key = tuple(parts)
            census[key] = census.get(key, 0) + 1
            return
        for v in range(n):
            if not placed[v] and preds[v] == 0:
                placed[v] = True
                for w in range(n):
                    if less[v * n + w]:
                        preds[w] -= 1
                perm[pos] = v + 1
                extend(pos + 1)
                for w in range(n):
                    if less[v * n + w]:
                        preds[w] += 1
                placed[v] = False

    extend(0)
    return census
