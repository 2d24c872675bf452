# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the three hot inner loops.

Mirrors the contracts of _fallback.py; see that module for the
reference semantics.  Vertex/edge indices are 0-based; graphs are desk
scale (n <= 32 vertices, m <= 64 edges).  Census keys are packed into a
64-bit integer when the ground set allows (n <= 10), else tuples.
"""

from libc.stdlib cimport calloc, free

from .errors import SearchBudgetExceeded

BACKEND = "cython"

cdef extern from *:
    """
    static int popcount_ull(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    static int ctz_ull(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    """
    int popcount_ull(unsigned long long x) nogil
    int ctz_ull(unsigned long long x) nogil


def _cycle_slacks(cycles, int k):
    return [len(c) - k for c in cycles]


def _edge_hit_table(edges, cycles):
    """Canonical edge (lo, hi) -> list of (cycle index, traversal goes lo->hi)."""
    table = {(min(a, b), max(a, b)): [] for a, b in edges}
    cdef int ci, t, r
    for ci, cyc in enumerate(cycles):
        r = len(cyc)
        for t in range(r):
            a, b = cyc[t], cyc[(t + 1) % r]
            table[(min(a, b), max(a, b))].append((ci, a < b))
    return table


def _unpack_key(long long key):
    parts = []
    cdef long long v = key
    while v:
        parts.append(v & 63)
        v >>= 6
    return tuple(reversed(parts))


# -- coloring census ---------------------------------------------------------

cdef class _CensusState:
    cdef int n, ncyc, packed
    cdef unsigned long long *adj
    cdef int *hstart        # per vertex: hits of edges it completes
    cdef int *hother
    cdef int *hcyc
    cdef int *hfwd
    cdef int *fwd
    cdef int *bwd
    cdef int *slack
    cdef int *parts
    cdef long long nodes, budget   # budget < 0 means unlimited
    cdef dict census

    def __cinit__(self, int n, edges, cycles, int k, budget):
        cdef int i, pos
        self.n = n
        self.ncyc = len(cycles)
        self.packed = 1 if n <= 10 else 0
        self.nodes = 0
        self.budget = -1 if budget is None else budget
        self.census = {}
        self.adj = <unsigned long long *> calloc(n, sizeof(unsigned long long))
        self.fwd = <int *> calloc(self.ncyc + 1, sizeof(int))
        self.bwd = <int *> calloc(self.ncyc + 1, sizeof(int))
        self.slack = <int *> calloc(self.ncyc + 1, sizeof(int))
        self.parts = <int *> calloc(n, sizeof(int))
        for i, s in enumerate(_cycle_slacks(cycles, k)):
            self.slack[i] = s
        for a, b in edges:
            self.adj[<int> a] |= 1ULL << <int> b
            self.adj[<int> b] |= 1ULL << <int> a
        per_vertex = [[] for _ in range(n)]
        for (lo, hi), hl in _edge_hit_table(edges, cycles).items():
            for ci, agrees in hl:
                per_vertex[hi].append((lo, ci, 1 if agrees else 0))
                per_vertex[lo].append((hi, ci, 0 if agrees else 1))
        total = sum(len(h) for h in per_vertex)
        self.hstart = <int *> calloc(n + 1, sizeof(int))
        self.hother = <int *> calloc(total + 1, sizeof(int))
        self.hcyc = <int *> calloc(total + 1, sizeof(int))
        self.hfwd = <int *> calloc(total + 1, sizeof(int))
        pos = 0
        for i in range(n):
            self.hstart[i] = pos
            for u, ci, f in per_vertex[i]:
                self.hother[pos] = u
                self.hcyc[pos] = ci
                self.hfwd[pos] = f
                pos += 1
        self.hstart[n] = pos

    def __dealloc__(self):
        free(self.adj)
        free(self.fwd)
        free(self.bwd)
        free(self.slack)
        free(self.parts)
        free(self.hstart)
        free(self.hother)
        free(self.hcyc)
        free(self.hfwd)

    cdef int _update(self, unsigned long long sub, unsigned long long assigned,
                     int limit, int undo) nogil:
        """Apply (undo=0) or roll back (undo=1) counter updates for the edges
        completed by placing class `sub`.  Applies at most `limit` updates
        (-1 = no limit); returns the number applied, negated if a counter
        overflowed its slack (apply mode stops there)."""
        cdef unsigned long long bits = sub
        cdef int v, h, ci, done = 0
        while bits:
            v = ctz_ull(bits)
            bits &= bits - 1
            for h in range(self.hstart[v], self.hstart[v + 1]):
                if not (assigned >> self.hother[h]) & 1:
                    continue
                if limit >= 0 and done == limit:
                    return done
                ci = self.hcyc[h]
                if self.hfwd[h]:
                    self.fwd[ci] += 1 - 2 * undo
                    done += 1
                    if not undo and self.fwd[ci] > self.slack[ci]:
                        return -done
                else:
                    self.bwd[ci] += 1 - 2 * undo
                    done += 1
                    if not undo and self.bwd[ci] > self.slack[ci]:
                        return -done
        return done

    cdef int place_class(self, unsigned long long remaining,
                         unsigned long long assigned, int depth) except -1:
        cdef unsigned long long sub = remaining & (~remaining + 1)
        cdef unsigned long long rest, bits
        cdef int v, applied, ok
        cdef long long key
        cdef int d
        while True:
            self.nodes += 1
            if self.budget >= 0 and self.nodes > self.budget:
                raise SearchBudgetExceeded(
                    f"coloring census exceeded node budget {self.budget}"
                )
            ok = 1
            bits = sub
            while bits:
                v = ctz_ull(bits)
                bits &= bits - 1
                if self.adj[v] & sub:
                    ok = 0
                    break
            applied = 0
            if ok:
                applied = self._update(sub, assigned, -1, 0)
                if applied < 0:
                    ok = 0
                    applied = -applied
            if ok:
                self.parts[depth] = popcount_ull(sub)
                rest = remaining & ~sub
                if rest == 0:
                    if self.packed:
                        key = 0
                        for d in range(depth + 1):
                            key = (key << 6) | self.parts[d]
                        if key in self.census:
                            self.census[key] += 1
                        else:
                            self.census[key] = 1
                    else:
                        tkey = tuple([self.parts[d] for d in range(depth + 1)])
                        if tkey in self.census:
                            self.census[tkey] += 1
                        else:
                            self.census[tkey] = 1
                else:
                    self.place_class(rest, assigned | sub, depth + 1)
            if applied:
                self._update(sub, assigned, applied, 1)
            if sub == remaining:
                return 0
            sub = (sub - remaining) & remaining


def coloring_census(int n, edges, cycles, int k, node_budget=None):
    """See _fallback.coloring_census."""
    if n == 0:
        return {(): 1}
    if n > 32:
        raise ValueError("compiled census supports n <= 32")
    cdef _CensusState st = _CensusState(n, edges, cycles, k, node_budget)
    st.place_class((1ULL << n) - 1, 0, 0)
    if n <= 10:
        return {_unpack_key(key): cnt for key, cnt in st.census.items()}
    return dict(st.census)


# -- orientation search ------------------------------------------------------

cdef class _OrientState:
    cdef int m, ncyc
    cdef int *order
    cdef int *hstart        # hits per edge (canonical edge index)
    cdef int *hcyc
    cdef int *hfwd
    cdef int *fwd
    cdef int *bwd
    cdef int *slack
    cdef long long nodes, budget
    cdef list results

    def __cinit__(self, edges, cycles, int k, budget, order):
        cdef int i, pos
        self.m = len(edges)
        self.ncyc = len(cycles)
        self.nodes = 0
        self.budget = -1 if budget is None else budget
        self.results = []
        self.fwd = <int *> calloc(self.ncyc + 1, sizeof(int))
        self.bwd = <int *> calloc(self.ncyc + 1, sizeof(int))
        self.slack = <int *> calloc(self.ncyc + 1, sizeof(int))
        self.order = <int *> calloc(self.m + 1, sizeof(int))
        for i, s in enumerate(_cycle_slacks(cycles, k)):
            self.slack[i] = s
        for i in range(self.m):
            self.order[i] = order[i]
        table = _edge_hit_table(edges, cycles)
        per_edge = [table[(min(a, b), max(a, b))] for a, b in edges]
        total = sum(len(h) for h in per_edge)
        self.hstart = <int *> calloc(self.m + 1, sizeof(int))
        self.hcyc = <int *> calloc(total + 1, sizeof(int))
        self.hfwd = <int *> calloc(total + 1, sizeof(int))
        pos = 0
        for i in range(self.m):
            self.hstart[i] = pos
            for ci, agrees in per_edge[i]:
                self.hcyc[pos] = ci
                self.hfwd[pos] = 1 if agrees else 0
                pos += 1
        self.hstart[self.m] = pos

    def __dealloc__(self):
        free(self.fwd)
        free(self.bwd)
        free(self.slack)
        free(self.order)
        free(self.hstart)
        free(self.hcyc)
        free(self.hfwd)

    cdef int _update(self, int e, int bit, int limit, int undo) nogil:
        cdef int h, ci, done = 0
        for h in range(self.hstart[e], self.hstart[e + 1]):
            if limit >= 0 and done == limit:
                return done
            ci = self.hcyc[h]
            # bit 0 keeps low-to-high; forward iff that matches traversal
            if (bit == 0) == (self.hfwd[h] == 1):
                self.fwd[ci] += 1 - 2 * undo
                done += 1
                if not undo and self.fwd[ci] > self.slack[ci]:
                    return -done
            else:
                self.bwd[ci] += 1 - 2 * undo
                done += 1
                if not undo and self.bwd[ci] > self.slack[ci]:
                    return -done
        return done

    cdef int place(self, int t, unsigned long long mask) except -1:
        cdef int bit, e, applied, ok
        if t == self.m:
            self.results.append(mask)
            return 0
        e = self.order[t]
        for bit in range(2):
            self.nodes += 1
            if self.budget >= 0 and self.nodes > self.budget:
                raise SearchBudgetExceeded(
                    f"orientation search exceeded node budget {self.budget}"
                )
            ok = 1
            applied = self._update(e, bit, -1, 0)
            if applied < 0:
                ok = 0
                applied = -applied
            if ok:
                self.place(t + 1, mask | ((<unsigned long long> bit) << e))
            if applied:
                self._update(e, bit, applied, 1)
        return 0


def orientation_search(edges, cycles, int k, node_budget=None):
    """See _fallback.orientation_search."""
    cdef int m = len(edges)
    if m > 64:
        raise ValueError("compiled search supports m <= 64 edges")
    slacks = _cycle_slacks(cycles, k)
    if any(s < k for s in slacks):
        return []
    table = _edge_hit_table(edges, cycles)
    shortest = []
    for a, b in edges:
        hl = table[(min(a, b), max(a, b))]
        shortest.append(min((slacks[ci] for ci, _ in hl), default=1 << 30))
    order = sorted(range(m), key=lambda e: (shortest[e], e))
    cdef _OrientState st = _OrientState(edges, cycles, k, node_budget, order)
    st.place(0, 0)
    return sorted(st.results)


# -- linear extension census -------------------------------------------------

cdef class _ExtState:
    cdef int n, packed
    cdef int *preds
    cdef unsigned char *lessm
    cdef int *perm
    cdef unsigned char *placed
    cdef dict census

    def __cinit__(self, int n, less):
        cdef int i, v
        self.n = n
        self.packed = 1 if n <= 10 else 0
        self.census = {}
        self.preds = <int *> calloc(n, sizeof(int))
        self.lessm = <unsigned char *> calloc(n * n, 1)
        self.perm = <int *> calloc(n, sizeof(int))
        self.placed = <unsigned char *> calloc(n, 1)
        for i in range(n * n):
            self.lessm[i] = 1 if less[i] else 0
        for v in range(n):
            for i in range(n):
                if self.lessm[i * n + v]:
                    self.preds[v] += 1

    def __dealloc__(self):
        free(self.preds)
        free(self.lessm)
        free(self.perm)
        free(self.placed)

    cdef int extend(self, int pos) except -1:
        cdef int v, w, t, run
        cdef long long key
        cdef int n = self.n
        if pos == n:
            if self.packed:
                key = 0
                run = 1
                for t in range(n - 1):
                    if self.perm[t] < self.perm[t + 1]:
                        key = (key << 6) | run
                        run = 1
                    else:
                        run += 1
                key = (key << 6) | run
                if key in self.census:
                    self.census[key] += 1
                else:
                    self.census[key] = 1
            else:
                parts = []
                run = 1
                for t in range(n - 1):
                    if self.perm[t] < self.perm[t + 1]:
                        parts.append(run)
                        run = 1
                    else:
                        run += 1
                parts.append(run)
                tkey = tuple(parts)
                if tkey in self.census:
                    self.census[tkey] += 1
                else:
                    self.census[tkey] = 1
            return 0
        for v in range(n):
            if not self.placed[v] and self.preds[v] == 0:
                self.placed[v] = 1
                for w in range(n):
                    if self.lessm[v * n + w]:
                        self.preds[w] -= 1
                self.perm[pos] = v + 1
                self.extend(pos + 1)
                for w in range(n):
                    if self.lessm[v * n + w]:
                        self.preds[w] += 1
                self.placed[v] = 0
        return 0


def linear_extension_census(int n, less):
    """See _fallback.linear_extension_census."""
    if n == 0:
        return {(): 1}
    if n > 63:
        raise ValueError("compiled extension census supports n <= 63")
    cdef _ExtState st = _ExtState(n, less)
    st.extend(0)
    if n <= 10:
        return {_unpack_key(key): cnt for key, cnt in st.census.items()}
    return dict(st.census)
