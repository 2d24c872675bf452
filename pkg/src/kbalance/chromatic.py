"""The headline computations: X^k_G two ways, closed forms, chi^k, reciprocity."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial

from .compositions import Composition, compositions_of
from .graphs import DEFAULT_CYCLE_CAP, Graph, complete_bipartite_graph, cycle_graph, simple_cycles
from .kernels import coloring_census
from .orient import (
    DEFAULT_NODE_BUDGET,
    induced_orientation,
    is_k_balanced,
    k_balanced_orientations,
    poset_of,
)
from .posets import kp, order_polynomial
from .qsym import MONOMIAL, QSymElement, RationalPolynomial, evaluate, specialize


def xk_via_colorings(
    g: Graph,
    k: int,
    cycle_cap: int | None = DEFAULT_CYCLE_CAP,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
) -> QSymElement:
    """X^k_G from the definition: census of k-balanced colorings by type.

    Only colorings onto initial color segments are enumerated; a degree-n
    quasisymmetric function is determined by compositions of length <= n.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    cycles = simple_cycles(g, cap=cycle_cap)
    edges0 = [(i - 1, j - 1) for i, j in g.edges]
    cycles0 = [[v - 1 for v in c] for c in cycles]
    census = coloring_census(g.n, edges0, cycles0, k, node_budget)
    coeffs = {Composition(parts): Fraction(c) for parts, c in census.items() if parts}
    return QSymElement(g.n, MONOMIAL, coeffs)


def xk_via_orientations(
    g: Graph,
    k: int,
    cycle_cap: int | None = DEFAULT_CYCLE_CAP,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
) -> QSymElement:
    """X^k_G as the sum of K_P over posets of k-balanced orientations."""
    total = QSymElement.zero(g.n, "L")
    for o in k_balanced_orientations(g, k, node_budget=node_budget, cycle_cap=cycle_cap):
        total = total + kp(poset_of(o))
    return total


def xk_cycle_closed_form(n: int) -> QSymElement:
    """X^2 of the n-cycle: X_{C_n} minus 2n times the all-ones monomial."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    x1 = xk_via_colorings(cycle_graph(n), 1)
    ones = Composition((1,) * n)
    coeffs = dict(x1.coeffs)
    coeffs[ones] = coeffs.get(ones, Fraction(0)) - 2 * n
    return QSymElement(n, MONOMIAL, coeffs)


def bipartite_pair_count(alpha: Composition, m: int, n: int) -> int:
    """Number of contiguous part runs (not starting at the first part) whose
    sum is m or n, counting a run twice when it hits both (i.e. m = n)."""
    parts = alpha.parts
    count = 0
    for i in range(2, alpha.length + 1):
        total = 0
        for j in range(i, alpha.length + 1):
            total += parts[j - 1]
            if total == m:
                count += 1
            if total == n:
                count += 1
    return count


def xk_complete_bipartite_closed_form(m: int, n: int) -> QSymElement:
    """X^2 of K_{m,n}: coefficient of M_alpha is m!n!/alpha! times the
    number of feasible rank splits of alpha."""
    if m < 1 or n < 1:
        raise ValueError("part sizes must be >= 1")
    pref = factorial(m) * factorial(n)
    coeffs: dict[Composition, Fraction] = {}
    for alpha in compositions_of(m + n):
        r = bipartite_pair_count(alpha, m, n)
        if r:
            coeffs[alpha] = Fraction(pref, alpha.part_factorial()) * r
    return QSymElement(m + n, MONOMIAL, coeffs)


def chi_k(
    g: Graph,
    k: int,
    cycle_cap: int | None = DEFAULT_CYCLE_CAP,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
) -> RationalPolynomial:
    """The k-balanced chromatic polynomial, as an exact rational polynomial."""
    return specialize(xk_via_colorings(g, k, cycle_cap, node_budget))


def leading_coefficient_check(g: Graph, k: int) -> tuple[Fraction, bool]:
    """(leading coefficient of chi^k, whether all coefficients are integers)."""
    p = chi_k(g, k)
    return p.leading_coefficient(), p.has_integer_coefficients()


def count_k_balanced_orientations(g: Graph, k: int, **kwargs) -> int:
    return len(k_balanced_orientations(g, k, **kwargs))


def reciprocity_pairs(g: Graph, k: int, lam: int, **kwargs) -> int:
    """Pairs (kappa, O): O a k-balanced orientation, kappa a map into [lam]
    weakly increasing along every directed edge of O."""
    if lam < 1:
        raise ValueError("lam must be >= 1")
    total = 0
    for o in k_balanced_orientations(g, k, **kwargs):
        total += order_polynomial(poset_of(o), lam)
    return total


def brute_force_balanced_coloring_count(g: Graph, k: int, lam: int) -> int:
    """Direct lam^n sweep counting k-balanced colorings; the slow oracle."""
    cycles = simple_cycles(g)
    count = 0
    for colors in product(range(1, lam + 1), repeat=g.n):
        kappa = {v: colors[v - 1] for v in range(1, g.n + 1)}
        if any(kappa[i] == kappa[j] for i, j in g.edges):
            continue
        if is_k_balanced(induced_orientation(g, kappa), k, cycles):
            count += 1
    return count


def classical_chromatic_polynomial(g: Graph) -> RationalPolynomial:
    """Chromatic polynomial by brute-force counts at n+1 points."""
    values = []
    for lam in range(1, g.n + 2):
        count = 0
        for colors in product(range(1, lam + 1), repeat=g.n):
            if all(colors[i - 1] != colors[j - 1] for i, j in g.edges):
                count += 1
        values.append((lam, count))
    return RationalPolynomial.interpolate(values)


def chi_k_at(g: Graph, k: int, lam: int, **kwargs) -> Fraction:
    return evaluate(chi_k(g, k, **kwargs), lam)
