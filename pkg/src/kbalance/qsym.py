"""Homogeneous quasisymmetric functions over exact rationals.

Elements are sparse maps from compositions to Fractions, tagged with the
basis they are expressed in: monomial (M) or fundamental (L).  The two
bases are related by Moebius inversion over the refinement order, which
is boolean, so conversion is superset summation with signs.

Everything here is exact; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Iterable, Mapping, Union

from .compositions import Composition, composition_of, subset_bitmask

MONOMIAL = "M"
FUNDAMENTAL = "L"

Rational = Union[int, Fraction]


def _term_order_key(alpha: Composition) -> int:
    # Canonical display order: descending S_alpha bitmask (so [1,1,1,1]
    # prints before [2,1,1] before [1,2,1] ... before [4]).
    return -subset_bitmask(alpha)


@dataclass(frozen=True)
class QSymElement:
    """A homogeneous quasisymmetric function of fixed degree."""

    degree: int
    basis: str
    coeffs: Mapping[Composition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in (MONOMIAL, FUNDAMENTAL):
            raise ValueError(f"unknown basis tag {self.basis!r}")
        clean = {}
        for alpha, c in self.coeffs.items():
            if not isinstance(alpha, Composition):
                alpha = Composition(tuple(alpha))
            if alpha.weight != self.degree:
                raise ValueError(
                    f"composition {alpha} has weight {alpha.weight}, element has degree {self.degree}"
                )
            c = Fraction(c)
            if c != 0:
                clean[alpha] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, degree: int, basis: str = MONOMIAL) -> "QSymElement":
        return cls(degree, basis, {})

    @classmethod
    def unit(cls, basis: str = MONOMIAL) -> "QSymElement":
        """The degree-0 multiplicative unit (empty composition)."""
        return cls(0, basis, {Composition(()): Fraction(1)})

    @classmethod
    def basis_element(cls, alpha: Composition, basis: str) -> "QSymElement":
        return cls(alpha.weight, basis, {alpha: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, alpha: Composition) -> Fraction:
        return self.coeffs.get(alpha, Fraction(0))

    def __add__(self, other: "QSymElement") -> "QSymElement":
        if self.basis != other.basis or self.degree != other.degree:
            raise ValueError("can only add elements of equal degree and basis")
        out = dict(self.coeffs)
        for alpha, c in other.coeffs.items():
            out[alpha] = out.get(alpha, Fraction(0)) + c
        return QSymElement(self.degree, self.basis, out)

    def __sub__(self, other: "QSymElement") -> "QSymElement":
        return self + other.scale(-1)

    def scale(self, c: Rational) -> "QSymElement":
        c = Fraction(c)
        return QSymElement(self.degree, self.basis, {a: v * c for a, v in self.coeffs.items()})

    def terms(self) -> list[tuple[Composition, Fraction]]:
        """(composition, coefficient) pairs in canonical display order."""
        return sorted(self.coeffs.items(), key=lambda kv: _term_order_key(kv[0]))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for alpha, c in self.terms():
            mag = abs(c)
            coeff = "" if mag == 1 else f"{mag}*"
            term = f"{coeff}{self.basis}{alpha}"
            if not pieces:
                pieces.append(term if c > 0 else f"-{term}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + term)
        return " ".join(pieces)

    def to_structured(self) -> dict:
        """Machine-readable form: (composition, numerator, denominator) triples."""
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [
                [list(alpha.parts), c.numerator, c.denominator] for alpha, c in self.terms()
            ],
        }


def _supersets(mask: int, n: int) -> Iterable[int]:
    """All supersets of mask within the full bitmask of [n-1]."""
    full = (1 << max(n - 1, 0)) - 1
    free = full & ~mask
    sub = 0
    while True:
        yield mask | sub
        if sub == free:
            return
        sub = (sub - free) & free


def _mask_to_composition(mask: int, n: int) -> Composition:
    S = [i + 1 for i in range(n - 1) if mask >> i & 1]
    return composition_of(S, n)


def l_to_m(F: QSymElement) -> QSymElement:
    """Expand a fundamental-basis element in the monomial basis."""
    if F.basis != FUNDAMENTAL:
        raise ValueError("l_to_m expects a fundamental-basis element")
    n = F.degree
    if n == 0:
        return QSymElement(0, MONOMIAL, dict(F.coeffs))
    out: dict[Composition, Fraction] = {}
    for alpha, c in F.coeffs.items():
        for sup in _supersets(subset_bitmask(alpha), n):
            beta = _mask_to_composition(sup, n)
            out[beta] = out.get(beta, Fraction(0)) + c
    return QSymElement(n, MONOMIAL, out)


def m_to_l(F: QSymElement) -> QSymElement:
    """Expand a monomial-basis element in the fundamental basis."""
    if F.basis != MONOMIAL:
        raise ValueError("m_to_l expects a monomial-basis element")
    n = F.degree
    if n == 0:
        return QSymElement(0, FUNDAMENTAL, dict(F.coeffs))
    out: dict[Composition, Fraction] = {}
    for alpha, c in F.coeffs.items():
        mask = subset_bitmask(alpha)
        la = bin(mask).count("1") + 1
        for sup in _supersets(mask, n):
            beta = _mask_to_composition(sup, n)
            sign = -1 if (bin(sup).count("1") + 1 - la) % 2 else 1
            out[beta] = out.get(beta, Fraction(0)) + sign * c
    return QSymElement(n, FUNDAMENTAL, out)


def multiply(F: QSymElement, G: QSymElement) -> QSymElement:
    """Product of two monomial-basis elements via the quasi-shuffle rule."""
    from .compositions import quasi_shuffles

    if F.basis != MONOMIAL or G.basis != MONOMIAL:
        raise ValueError("multiply expects monomial-basis elements (convert first)")
    out: dict[Composition, Fraction] = {}
    for alpha, c in F.coeffs.items():
        for beta, d in G.coeffs.items():
            for gamma in quasi_shuffles(alpha, beta):
                out[gamma] = out.get(gamma, Fraction(0)) + c * d
    return QSymElement(F.degree + G.degree, MONOMIAL, out)


def is_symmetric(F: QSymElement) -> bool:
    """True iff coefficients depend only on the multiset of parts."""
    if F.basis != MONOMIAL:
        raise ValueError("is_symmetric expects a monomial-basis element")
    seen: set[tuple[int, ...]] = set()
    for alpha in F.coeffs:
        key = tuple(sorted(alpha.parts))
        if key in seen:
            continue
        seen.add(key)
        c = F.coefficient(alpha)
        for rearranged in set(permutations(alpha.parts)):
            if F.coefficient(Composition(rearranged)) != c:
                return False
    return True


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense univariate polynomial with exact rational coefficients."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else Fraction(0)

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(n))
        )

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + other.scale(-1)

    def scale(self, c: Rational) -> "RationalPolynomial":
        c = Fraction(c)
        return RationalPolynomial(tuple(v * c for v in self.coeffs))

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if self.is_zero() or other.is_zero():
            return RationalPolynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    def __call__(self, x: Rational) -> Fraction:
        return evaluate(self, x)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"

        def rat(c: Fraction) -> str:
            return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

        pieces = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and not (i == 0 and len(self.coeffs) == 1):
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = rat(abs(c)) + ("*" + mono if mono else "")
            if not pieces:
                pieces.append(body if c >= 0 else f"-{body}")
            else:
                pieces.append(("+ " if c >= 0 else "- ") + body)
        return " ".join(pieces)

    def to_structured(self) -> list[list[int]]:
        return [[i, c.numerator, c.denominator] for i, c in enumerate(self.coeffs)]

    @classmethod
    def interpolate(cls, points: Iterable[tuple[Rational, Rational]]) -> "RationalPolynomial":
        """Lagrange interpolation through exact points."""
        pts = [(Fraction(x), Fraction(y)) for x, y in points]
        if len({x for x, _ in pts}) != len(pts):
            raise ValueError("interpolation nodes must be distinct")
        total = cls.zero()
        for i, (xi, yi) in enumerate(pts):
            num = cls((Fraction(1),))
            den = Fraction(1)
            for j, (xj, _) in enumerate(pts):
                if j == i:
                    continue
                num = num * cls((-xj, Fraction(1)))
                den *= xi - xj
            total = total + num.scale(yi / den)
        return total


def binomial_polynomial(i: int) -> RationalPolynomial:
    """C(x, i) as a polynomial: falling factorial over i factorial."""
    if i < 0:
        raise ValueError("i must be >= 0")
    p = RationalPolynomial((Fraction(1),))
    for j in range(i):
        p = p * RationalPolynomial((Fraction(-j), Fraction(1)))
    return p.scale(Fraction(1, factorial(i)))


def specialize(F: QSymElement) -> RationalPolynomial:
    """Principal specialization: set the first lambda variables to 1.

    M_alpha evaluates to C(lambda, length(alpha)), so the result is the
    sum of coeff * C(lambda, length) over the support.
    """
    if F.basis != MONOMIAL:
        raise ValueError("specialize expects a monomial-basis element")
    by_length: dict[int, Fraction] = {}
    for alpha, c in F.coeffs.items():
        by_length[alpha.length] = by_length.get(alpha.length, Fraction(0)) + c
    out = RationalPolynomial.zero()
    for length, c in sorted(by_length.items()):
        out = out + binomial_polynomial(length).scale(c)
    return out


def evaluate(p: RationalPolynomial, x: Rational) -> Fraction:
    """Exact Horner evaluation; negative arguments are fine."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc
