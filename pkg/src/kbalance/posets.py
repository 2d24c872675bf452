"""Finite posets on [n]: relabelling, linear extensions, K_P, order polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .compositions import Composition, ascent_composition
from .kernels import linear_extension_census
from .qsym import FUNDAMENTAL, QSymElement, RationalPolynomial


@dataclass(frozen=True)
class Poset:
    """Strict partial order on {1..n}, stored transitively closed."""

    n: int
    less: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.less:
            if not (1 <= i <= self.n and 1 <= j <= self.n) or i == j:
                raise ValueError(f"bad relation {i} < {j} on ground set [{self.n}]")
            if (j, i) in self.less:
                raise ValueError(f"antisymmetry violated: {i} and {j}")
        for i, j in self.less:
            for a, b in self.less:
                if j == a and (i, b) not in self.less:
                    raise ValueError(f"relation set not transitively closed at {i}<{j}<{b}")

    @classmethod
    def from_relations(cls, n: int, relations: Iterable[tuple[int, int]]) -> "Poset":
        """Transitive closure of generating relations; rejects cycles."""
        closed = set(tuple(r) for r in relations)
        changed = True
        while changed:
            changed = False
            for i, j in list(closed):
                for a, b in list(closed):
                    if j == a and (i, b) not in closed:
                        closed.add((i, b))
                        changed = True
        for i, j in closed:
            if i == j or (j, i) in closed:
                raise ValueError("generating relations contain a cycle")
        return cls(n, frozenset(closed))

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls.from_relations(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(n, frozenset())

    def lt(self, i: int, j: int) -> bool:
        return (i, j) in self.less

    def covers(self) -> list[tuple[int, int]]:
        """Cover relations: i < j with nothing strictly between."""
        out = []
        for i, j in self.less:
            if not any(self.lt(i, t) and self.lt(t, j) for t in range(1, self.n + 1)):
                out.append((i, j))
        return sorted(out)

    def is_naturally_labelled(self) -> bool:
        return all(i < j for i, j in self.less)

    def serialize(self) -> str:
        rels = " ".join(f"{i}<{j}" for i, j in self.covers())
        return f"n={self.n} {rels}".strip()


def natural_relabelling(P: Poset) -> tuple[Poset, dict[int, int]]:
    """Order-isomorphic naturally labelled copy, plus old -> new vertex map.

    Canonical choice: relabel along the lexicographically least linear
    extension of P, so the result is deterministic.  K_P does not depend
    on which natural relabelling is chosen.
    """
    ext = _lex_least_extension(P)
    mapping = {v: t + 1 for t, v in enumerate(ext)}
    rel = frozenset((mapping[i], mapping[j]) for i, j in P.less)
    return Poset(P.n, rel), mapping


def _lex_least_extension(P: Poset) -> list[int]:
    preds = {v: sum(1 for i in range(1, P.n + 1) if P.lt(i, v)) for v in range(1, P.n + 1)}
    placed: list[int] = []
    avail = set(range(1, P.n + 1))
    while avail:
        v = min(u for u in avail if preds[u] == 0)
        placed.append(v)
        avail.remove(v)
        for w in avail:
            if P.lt(v, w):
                preds[w] -= 1
    return placed


def linear_extensions(P: Poset) -> list[tuple[int, ...]]:
    """All linear extensions of a naturally labelled poset, lexicographic."""
    if not P.is_naturally_labelled():
        raise ValueError("linear_extensions requires a naturally labelled poset; relabel first")
    out: list[tuple[int, ...]] = []
    preds = {v: sum(1 for i in range(1, P.n + 1) if P.lt(i, v)) for v in range(1, P.n + 1)}
    perm: list[int] = []
    used = [False] * (P.n + 1)

    def extend():
        if len(perm) == P.n:
            out.append(tuple(perm))
            return
        for v in range(1, P.n + 1):
            if not used[v] and preds[v] == 0:
                used[v] = True
                for w in range(1, P.n + 1):
                    if P.lt(v, w):
                        preds[w] -= 1
                perm.append(v)
                extend()
                perm.pop()
                for w in range(1, P.n + 1):
                    if P.lt(v, w):
                        preds[w] += 1
                used[v] = False

    extend()
    return out


def kp(P: Poset) -> QSymElement:
    """Quasisymmetric function of a poset, in the fundamental basis.

    Sum of L over the ascent compositions of the linear extensions of a
    natural relabelling of P.
    """
    Q, _ = natural_relabelling(P)
    n = Q.n
    flat = [0] * (n * n)
    for i, j in Q.less:
        flat[(i - 1) * n + (j - 1)] = 1
    census = linear_extension_census(n, flat)
    coeffs = {Composition(parts): Fraction(c) for parts, c in census.items()}
    return QSymElement(n, FUNDAMENTAL, coeffs)


def strict_order_polynomial(P: Poset, lam: int) -> int:
    """Count of strict order-preserving maps from P into [lam], by brute force."""
    if lam < 0:
        raise ValueError("lam must be >= 0")
    return sum(
        1
        for tau in product(range(1, lam + 1), repeat=P.n)
        if all(tau[i - 1] < tau[j - 1] for i, j in P.less)
    )


def order_polynomial(P: Poset, lam: int) -> int:
    """Count of weak order-preserving maps from P into [lam], by brute force."""
    if lam < 0:
        raise ValueError("lam must be >= 0")
    return sum(
        1
        for tau in product(range(1, lam + 1), repeat=P.n)
        if all(tau[i - 1] <= tau[j - 1] for i, j in P.less)
    )


def _interpolated(values: Sequence[int]) -> RationalPolynomial:
    return RationalPolynomial.interpolate([(x + 1, v) for x, v in enumerate(values)])


def strict_order_polynomial_poly(P: Poset) -> RationalPolynomial:
    """Strict order polynomial as a RationalPolynomial (degree <= n)."""
    return _interpolated([strict_order_polynomial(P, lam) for lam in range(1, P.n + 2)])


def order_polynomial_poly(P: Poset) -> RationalPolynomial:
    """Order polynomial as a RationalPolynomial (degree <= n)."""
    return _interpolated([order_polynomial(P, lam) for lam in range(1, P.n + 2)])


def is_pi_compatible(f: Sequence[int], pi: Sequence[int]) -> bool:
    """Weakly increasing along pi, strict at ascents of pi (f is 1-based on [n])."""
    for t in range(len(pi) - 1):
        a, b = f[pi[t] - 1], f[pi[t + 1] - 1]
        if a > b or (pi[t] < pi[t + 1] and a >= b):
            return False
    return True


# re-export for callers assembling K_P by hand in tests
__all__ = [
    "Poset",
    "natural_relabelling",
    "linear_extensions",
    "kp",
    "strict_order_polynomial",
    "order_polynomial",
    "strict_order_polynomial_poly",
    "order_polynomial_poly",
    "is_pi_compatible",
    "ascent_composition",
]
