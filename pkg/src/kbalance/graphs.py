"""Simple undirected graphs on {1..n}.

Construction, graph6 and edge-list parsing, named generators, simple
cycle enumeration (every cycle once, in canonical form) and girth.
Everything is desk scale: the enumeration is exponential in the worst
case, so it honors an explicit cycle-count cap rather than truncating.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import CycleCapExceeded

DEFAULT_CYCLE_CAP = 100_000


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices 1..n and sorted edge tuples."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge ({i},{j}) out of range [1,{self.n}]")
            seen.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for v in adj:
            adj[v].sort()
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in set(self.edges)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.adjacency()
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph from (possibly repeated) vertex pairs."""
    return Graph(n, tuple((int(i), int(j)) for i, j in pairs))


def parse_edge_list_text(text: str) -> Graph:
    """Parse "n m" header followed by one "i j" pair per line."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("edge-list text needs an 'n m' header")
    n, m = int(tokens[0]), int(tokens[1])
    body = tokens[2:]
    if len(body) != 2 * m:
        raise ValueError(f"expected {m} edges, found {len(body) // 2} pairs")
    pairs = [(int(body[2 * t]), int(body[2 * t + 1])) for t in range(m)]
    g = from_edge_list(n, pairs)
    if g.m != m:
        raise ValueError("duplicate edges in edge-list input")
    return g


def from_graph6(s: str) -> Graph:
    """Decode a graph6 string (n <= 62; the short form)."""
    s = s.strip()
    if not s:
        raise ValueError("empty graph6 string")
    if any(not (63 <= ord(c) <= 126) for c in s):
        raise ValueError(f"invalid graph6 characters in {s!r}")
    if ord(s[0]) == 126:
        raise ValueError("graph6 long form (n > 62) not supported")
    n = ord(s[0]) - 63
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - 1 != need:
        raise ValueError(f"graph6 string for n={n} needs {need} data characters, got {len(s) - 1}")
    bits = []
    for c in s[1:]:
        v = ord(c) - 63
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    t = 0
    for j in range(1, n):  # column-major upper triangle, 0-based (i, j), i < j
        for i in range(j):
            if bits[t]:
                edges.append((i + 1, j + 1))
            t += 1
    if any(bits[n * (n - 1) // 2 :]):
        raise ValueError("nonzero padding bits in graph6 string")
    return Graph(n, tuple(edges))


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (n <= 62)."""
    if g.n > 62:
        raise ValueError("graph6 long form (n > 62) not supported")
    es = set(g.edges)
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i + 1, j + 1) in es else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for t in range(0, len(bits), 6):
        v = 0
        for b in bits[t : t + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


# -- named generators --------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def complete_bipartite_graph(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite needs part sizes >= 1")
    return Graph(m + n, tuple((i, m + j) for i in range(1, m + 1) for j in range(1, n + 1)))


def grotzsch_graph() -> Graph:
    """Mycielskian of C_5: cycle 1..5, shadows 6..10, apex 11."""
    edges = [(i, i % 5 + 1) for i in range(1, 6)]
    for i in range(1, 6):
        left = (i - 2) % 5 + 1
        right = i % 5 + 1
        edges += [(5 + i, left), (5 + i, right)]
    edges += [(11, 5 + i) for i in range(1, 6)]
    return Graph(11, tuple(edges))


def petersen_graph() -> Graph:
    """Outer cycle 1..5, inner pentagram 6..10, spokes i -- i+5."""
    edges = [(i, i % 5 + 1) for i in range(1, 6)]
    edges += [(5 + i, 5 + (i + 1) % 5 + 1) for i in range(1, 6)]
    edges += [(i, i + 5) for i in range(1, 6)]
    return Graph(10, tuple(edges))


GENERATORS = {
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
    "grotzsch": (grotzsch_graph, 0),
    "petersen": (petersen_graph, 0),
}


def generator(name: str, *params: int) -> Graph:
    """Named generator dispatch: cycle n, path n, complete_bipartite m n, grotzsch, petersen."""
    if name not in GENERATORS:
        raise ValueError(f"unknown generator {name!r} (choose from {sorted(GENERATORS)})")
    fn, arity = GENERATORS[name]
    if len(params) != arity:
        raise ValueError(f"generator {name!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def parse_generator_spec(spec: str) -> Graph:
    """Parse "name", "name:p1" or "name:p1,p2"."""
    name, _, rest = spec.partition(":")
    params = tuple(int(p) for p in rest.split(",")) if rest else ()
    return generator(name.strip(), *params)


# -- cycles and girth --------------------------------------------------------


def simple_cycles(g: Graph, cap: int | None = DEFAULT_CYCLE_CAP) -> list[tuple[int, ...]]:
    """Every simple cycle exactly once, canonical and deterministically ordered.

    Canonical form: smallest vertex first, and the second vertex smaller
    than the last (fixing the traversal direction).  Enumeration roots a
    backtracking search at the minimum vertex of each cycle, visiting
    only larger vertices, so no cycle is produced twice.
    """
    adj = g.adjacency()
    out: list[tuple[int, ...]] = []
    path: list[int] = []
    on_path = [False] * (g.n + 1)

    def extend(root: int, v: int):
        for w in adj[v]:
            if w == root and len(path) >= 3 and path[1] < path[-1]:
                out.append(tuple(path))
                if cap is not None and len(out) > cap:
                    raise CycleCapExceeded(
                        f"more than {cap} simple cycles; raise the cycle cap to proceed"
                    )
            elif w > root and not on_path[w]:
                path.append(w)
                on_path[w] = True
                extend(root, w)
                on_path[w] = False
                path.pop()

    for root in range(1, g.n + 1):
        path = [root]
        on_path = [False] * (g.n + 1)
        on_path[root] = True
        extend(root, root)
    return sorted(out, key=lambda c: (len(c), c))


def girth(g: Graph) -> int | float:
    """Length of the shortest cycle, or math.inf for forests.

    Computed by BFS from every vertex, independently of simple_cycles.
    """
    adj = g.adjacency()
    best = math.inf
    for root in range(1, g.n + 1):
        depth = {root: 0}
        parent = {root: 0}
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w not in depth:
                        depth[w] = depth[v] + 1
                        parent[w] = v
                        nxt.append(w)
                    elif w != parent[v] and depth[w] >= depth[v]:
                        best = min(best, depth[v] + depth[w] + 1)
            frontier = nxt
    return best


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G + H with H's vertex labels shifted above G's."""
    shifted = tuple((i + g.n, j + g.n) for i, j in h.edges)
    return Graph(g.n + h.n, g.edges + shifted)


def all_connected_graphs(n: int) -> list[Graph]:
    """All labelled connected graphs on vertex set [n], by edge bitmask."""
    pairs = list(combinations(range(1, n + 1), 2))
    out = []
    for mask in range(1 << len(pairs)):
        g = Graph(n, tuple(p for t, p in enumerate(pairs) if mask >> t & 1))
        if g.is_connected():
            out.append(g)
    return out


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    """A uniformly random edge subset, resampled until connected."""
    pairs = list(combinations(range(1, n + 1), 2))
    while True:
        g = Graph(n, tuple(p for p in pairs if rng.random() < 0.5))
        if g.is_connected():
            return g
