"""Orientations, the k-balance predicate, and the pruned enumerator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .graphs import DEFAULT_CYCLE_CAP, Graph, simple_cycles
from .kernels import orientation_search
from .posets import Poset

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of a graph.

    directions[t] is an ordered pair (tail, head) for graph.edges[t].
    """

    graph: Graph
    directions: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.directions) != self.graph.m:
            raise ValueError("one direction required per edge")
        for (i, j), (a, b) in zip(self.graph.edges, self.directions):
            if {a, b} != {i, j}:
                raise ValueError(f"direction ({a},{b}) does not match edge ({i},{j})")

    @classmethod
    def from_bitmask(cls, graph: Graph, mask: int) -> "Orientation":
        """Bit t clear directs edge t low-to-high, set directs it high-to-low."""
        dirs = tuple(
            (j, i) if mask >> t & 1 else (i, j) for t, (i, j) in enumerate(graph.edges)
        )
        return cls(graph, dirs)

    def bitmask(self) -> int:
        mask = 0
        for t, ((i, j), (a, b)) in enumerate(zip(self.graph.edges, self.directions)):
            if (a, b) == (j, i):
                mask |= 1 << t
        return mask

    def serialize(self) -> str:
        return " ".join(f"{a}->{b}" for a, b in self.directions)


def induced_orientation(g: Graph, kappa: Mapping[int, int]) -> Orientation:
    """Direct every edge toward the endpoint with the greater color."""
    dirs = []
    for i, j in g.edges:
        ci, cj = kappa[i], kappa[j]
        if ci == cj:
            raise ValueError(f"coloring is not proper on edge ({i},{j})")
        dirs.append((i, j) if ci < cj else (j, i))
    return Orientation(g, tuple(dirs))


def is_k_balanced(o: Orientation, k: int, cycles: Sequence[tuple[int, ...]]) -> bool:
    """At least k edges each way around every weak cycle."""
    heads = {(a, b) for a, b in o.directions}
    for cyc in cycles:
        r = len(cyc)
        fwd = sum(1 for t in range(r) if (cyc[t], cyc[(t + 1) % r]) in heads)
        if fwd < k or r - fwd < k:
            return False
    return True


def k_balanced_orientations(
    g: Graph,
    k: int,
    cycles: Sequence[tuple[int, ...]] | None = None,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
    cycle_cap: int | None = DEFAULT_CYCLE_CAP,
) -> list[Orientation]:
    """All k-balanced orientations, in ascending edge-bitmask order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if cycles is None:
        cycles = simple_cycles(g, cap=cycle_cap)
    masks = orientation_search(list(g.edges), [list(c) for c in cycles], k, node_budget)
    return [Orientation.from_bitmask(g, m) for m in masks]


def poset_of(o: Orientation) -> Poset:
    """Transitive closure of the directed edges; rejects cyclic orientations.

    The directed edges are exactly the cover relations of the result iff
    the orientation is 2-balanced.
    """
    try:
        return Poset.from_relations(o.graph.n, o.directions)
    except ValueError as exc:
        raise ValueError(f"orientation is not acyclic: {exc}") from exc
