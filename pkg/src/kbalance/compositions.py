"""Compositions of n and their subset/refinement combinatorics.

A composition of n is an ordered tuple of positive integers summing to n.
Compositions of n are in bijection with subsets of {1, ..., n-1} via
partial sums, and the refinement order on compositions is subset
inclusion under that bijection.  The empty composition (weight 0) is
admitted as the multiplicative unit of the quasi-shuffle algebra.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence


@dataclass(frozen=True, order=True)
class Composition:
    """An ordered tuple of positive integer parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.parts, tuple):
            object.__setattr__(self, "parts", tuple(self.parts))
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive integers: {self.parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse the bracketed form, e.g. "[3,2,1,2]"."""
        m = re.fullmatch(r"\[\s*(?:(\d+)(?:\s*,\s*(\d+))*)?\s*\]", text.strip())
        if m is None:
            raise ValueError(f"not a composition literal: {text!r}")
        inner = text.strip()[1:-1].strip()
        if not inner:
            return cls(())
        return cls(tuple(int(p) for p in inner.split(",")))

    def part_factorial(self) -> int:
        """Product of factorials of the parts."""
        from math import factorial

        out = 1
        for p in self.parts:
            out *= factorial(p)
        return out


class SubsetOfRange(NamedTuple):
    """A subset of {1, ..., n-1}, stored sorted, with its weight context n."""

    n: int
    elements: tuple[int, ...]


def subset_of(alpha: Composition) -> SubsetOfRange:
    """Partial sums of alpha excluding the final one."""
    if alpha.length == 0:
        raise ValueError("subset_of requires a nonempty composition")
    sums = []
    acc = 0
    for p in alpha.parts[:-1]:
        acc += p
        sums.append(acc)
    return SubsetOfRange(alpha.weight, tuple(sums))


def composition_of(S: Sequence[int], n: int) -> Composition:
    """Inverse of subset_of: successive differences of S, capped by n."""
    elems = sorted(set(S))
    if any(s < 1 or s > n - 1 for s in elems):
        raise ValueError(f"subset {elems} not contained in [1, {n - 1}]")
    parts = []
    prev = 0
    for s in elems:
        parts.append(s - prev)
        prev = s
    parts.append(n - prev)
    return Composition(tuple(parts))


def refines(alpha: Composition, beta: Composition) -> bool:
    """Non-strict refinement: alpha <= beta iff S_alpha is a subset of S_beta."""
    if alpha.weight != beta.weight:
        raise ValueError("refinement compares compositions of equal weight")
    return set(subset_of(alpha).elements) <= set(subset_of(beta).elements)


def ascent_composition(pi: Sequence[int]) -> Composition:
    """Composition of a permutation: lengths of maximal decreasing runs."""
    n = len(pi)
    if sorted(pi) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of [{n}]: {pi}")
    parts = []
    run = 1
    for i in range(n - 1):
        if pi[i] < pi[i + 1]:  # ascent ends the current decreasing run
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return Composition(tuple(parts))


def quasi_shuffles(alpha: Composition, beta: Composition) -> list[Composition]:
    """All overlapping shuffles of alpha and beta, with multiplicity.

    Interleaves the parts of the two compositions preserving their
    relative orders, optionally adding one part of each at any meeting
    point.  The returned multiset gives the monomial-basis product:
    M_alpha * M_beta = sum of M_gamma over the output.
    """

    def rec(a: tuple[int, ...], b: tuple[int, ...]) -> list[tuple[int, ...]]:
        if not a:
            return [b]
        if not b:
            return [a]
        out = [(a[0],) + rest for rest in rec(a[1:], b)]
        out += [(b[0],) + rest for rest in rec(a, b[1:])]
        out += [(a[0] + b[0],) + rest for rest in rec(a[1:], b[1:])]
        return out

    return [Composition(t) for t in rec(alpha.parts, beta.parts)]


def subset_bitmask(alpha: Composition) -> int:
    """S_alpha encoded as an integer with bit s-1 set for each s in S_alpha."""
    if alpha.length == 0:
        return 0
    mask = 0
    for s in subset_of(alpha).elements:
        mask |= 1 << (s - 1)
    return mask


def compositions_of(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n, ordered by ascending S_alpha bitmask."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for mask in range(1 << (n - 1)):
        S = [i + 1 for i in range(n - 1) if mask >> i & 1]
        out.append(composition_of(S, n))
    return out
