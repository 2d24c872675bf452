"""Shared test oracles, independent of the code paths they check."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, product

from kbalance.compositions import Composition


def monomial_series(alpha: Composition, nvars: int) -> dict[tuple[int, ...], Fraction]:
    """M_alpha expanded as a polynomial in x_1..x_nvars: exponent tuple -> coeff."""
    out: dict[tuple[int, ...], Fraction] = {}
    length = alpha.length
    if length == 0:
        return {(0,) * nvars: Fraction(1)}
    for idxs in combinations_with_replacement(range(nvars), length):
        if len(set(idxs)) != length:
            continue  # need strictly increasing variable indices
        expo = [0] * nvars
        for t, i in enumerate(sorted(idxs)):
            expo[i] = alpha.parts[t]
        key = tuple(expo)
        out[key] = out.get(key, Fraction(0)) + 1
    return out


def fundamental_series(alpha: Composition, nvars: int) -> dict[tuple[int, ...], Fraction]:
    """L_alpha expanded in x_1..x_nvars directly from its defining sum."""
    n = alpha.weight
    strict_at = set()
    acc = 0
    for p in alpha.parts[:-1]:
        acc += p
        strict_at.add(acc)
    out: dict[tuple[int, ...], Fraction] = {}
    for seq in combinations_with_replacement(range(nvars), n):
        ok = True
        for j in range(1, n):
            if j in strict_at and seq[j - 1] >= seq[j]:
                ok = False
                break
        if not ok:
            continue
        expo = [0] * nvars
        for i in seq:
            expo[i] += 1
        key = tuple(expo)
        out[key] = out.get(key, Fraction(0)) + 1
    return out


def series_product(a: dict, b: dict) -> dict:
    out: dict[tuple[int, ...], Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return out


def series_sum(parts: list[dict]) -> dict:
    out: dict[tuple[int, ...], Fraction] = {}
    for p in parts:
        for e, c in p.items():
            out[e] = out.get(e, Fraction(0)) + c
    return {e: c for e, c in out.items() if c != 0}


def qsym_series(F, nvars: int) -> dict:
    """Expand a QSymElement in nvars variables from basis definitions."""
    from kbalance.qsym import FUNDAMENTAL

    expand = fundamental_series if F.basis == FUNDAMENTAL else monomial_series
    return series_sum([{e: c * w for e, c in expand(alpha, nvars).items()}
                       for alpha, w in F.coeffs.items()])


def brute_force_balanced_colorings(g, k: int, lam: int) -> list[tuple[int, ...]]:
    """All k-balanced colorings of g with colors in [lam], checked from scratch.

    Independent of the package's orientation/census machinery: cycles are
    found by pure subset enumeration and balance is verified literally.
    """
    cycles = brute_force_cycles(g)
    out = []
    for colors in product(range(1, lam + 1), repeat=g.n):
        if any(colors[i - 1] == colors[j - 1] for i, j in g.edges):
            continue
        if all(_balanced_on(colors, cyc, k) for cyc in cycles):
            out.append(colors)
    return out


def _balanced_on(colors, cyc, k):
    r = len(cyc)
    fwd = sum(1 for t in range(r) if colors[cyc[t] - 1] < colors[cyc[(t + 1) % r] - 1])
    return fwd >= k and r - fwd >= k


def brute_force_cycles(g) -> list[tuple[int, ...]]:
    """All simple cycles by checking every vertex permutation of every subset."""
    from itertools import permutations

    found = set()
    verts = range(1, g.n + 1)
    es = set(g.edges)

    def adj(a, b):
        return (min(a, b), max(a, b)) in es

    for r in range(3, g.n + 1):
        for subset in combinations_with_replacement(verts, r):
            if len(set(subset)) != r:
                continue
            for perm in permutations(sorted(set(subset))):
                if perm[0] != min(perm):
                    continue
                if all(adj(perm[t], perm[(t + 1) % r]) for t in range(r)):
                    canon = perm if perm[1] < perm[-1] else (perm[0],) + tuple(reversed(perm[1:]))
                    found.add(canon)
    return sorted(found, key=lambda c: (len(c), c))


def composition_type(colors: tuple[int, ...]) -> tuple[int, ...]:
    """Multiplicities of the colors actually used, in increasing color order."""
    used = sorted(set(colors))
    return tuple(colors.count(c) for c in used)
