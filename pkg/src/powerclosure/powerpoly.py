"""Decision procedures for powered univariate polynomials over Q.

A nonzero f is *powered* when f divides f(x**i) for every i >= 1; equivalently
(f) is a power-closed ideal of Q[x].  Working from the cyclotomic split
``f = unit * x**v * prod(phi_n**k_n) * residual`` this module decides the
property, computes the monic generators of the power-closure (f)^(*) and the
power-interior (f)^(o), and produces the unique nested psi-polynomial
decomposition of a powered polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .cyclotomic import cyclotomic_poly, divisors, factor_cyclotomic
from .field import Scalar
from .unipoly import UniPoly, lcm


@dataclass(frozen=True)
class Antichain:
    """Finite set of positive integers, none dividing another."""

    elements: frozenset[int]

    def __post_init__(self):
        elems = sorted(self.elements)
        if not elems:
            raise ValueError("antichain must be nonempty")
        for i, a in enumerate(elems):
            if a < 1:
                raise ValueError("antichain elements must be positive")
            for b in elems[i + 1 :]:
                if b % a == 0:
                    raise ValueError(f"{a} divides {b}: not an antichain")

    @classmethod
    def from_set(cls, values: Iterable[int]) -> "Antichain":
        """Antichain of maximal elements of ``values`` under divisibility."""
        vals = set(values)
        maximal = {a for a in vals if not any(b != a and b % a == 0 for b in vals)}
        return cls(frozenset(maximal))

    def downset(self) -> frozenset[int]:
        out: set[int] = set()
        for a in self.elements:
            out.update(divisors(a))
        return frozenset(out)

    def sorted(self) -> list[int]:
        return sorted(self.elements)


@dataclass(frozen=True)
class PsiDecomposition:
    """``f = unit * x**valuation * prod(psi_{A_i} ** e_i)``.

    Factors are listed with strictly decreasing downsets (the first antichain
    has the largest downset), exponents are the positive increments between
    consecutive distinct cyclotomic multiplicities.
    """

    factors: tuple[tuple[Antichain, int], ...]
    valuation: int
    unit: Scalar

    def reconstruct(self) -> UniPoly:
        f = UniPoly.one()
        for antichain, e in self.factors:
            f = f * psi_polynomial(antichain.elements) ** e
        return (f * self.unit).times_x_power(self.valuation)


def exponents_powered(exponents: dict[int, int]) -> bool:
    """Divisor-monotonicity: k_d >= k_n whenever d | n (missing d counts 0)."""
    for n, k in exponents.items():
        if k < 1:
            raise ValueError("multiplicities must be positive")
        for d in divisors(n)[:-1]:
            if exponents.get(d, 0) < k:
                return False
    return True


def is_powered(f: UniPoly) -> bool:
    """True when f divides f(x**i) for every i >= 1 (an x**v factor is fine)."""
    if f.is_zero():
        raise ValueError("the zero polynomial is not classified")
    fc = factor_cyclotomic(f)
    return fc.residual.degree() == 0 and exponents_powered(fc.exponents)


def _from_exponents(exponents: dict[int, int], valuation: int) -> UniPoly:
    f = UniPoly.one()
    for n, k in sorted(exponents.items()):
        if k > 0:
            f = f * cyclotomic_poly(n) ** k
    return f.times_x_power(valuation)


def power_closure(f: UniPoly) -> UniPoly:
    """Monic generator of (f)^(*), the smallest power-closed ideal over (f).

    The multiplicity of phi_n drops to min(k_d : d | n); the residual part
    contributes nothing.  Equals the monic gcd of f(x**i) for i = 1..deg(f)+1.
    """
    if f.is_zero():
        raise ValueError("the zero ideal needs no closure generator")
    fc = factor_cyclotomic(f)
    closed = {}
    for n in fc.exponents:
        p = min(fc.exponents.get(d, 0) for d in divisors(n))
        if p > 0:
            closed[n] = p
    return _from_exponents(closed, fc.x_valuation)


def power_interior(f: UniPoly) -> UniPoly:
    """Monic generator of (f)^(o), the largest power-closed ideal inside (f).

    Returns the zero polynomial when the interior is the zero ideal (any
    factor with a root that is not a root of unity forces that).  Otherwise
    the multiplicity of phi_n rises to max(k_m : n | m).
    """
    if f.is_zero():
        raise ValueError("the zero ideal needs no interior generator")
    fc = factor_cyclotomic(f)
    if fc.residual.degree() > 0:
        return UniPoly.zero()
    support = set()
    for n in fc.exponents:
        support.update(divisors(n))
    interior = {
        n: max(k for m, k in fc.exponents.items() if m % n == 0)
        for n in support
    }
    return _from_exponents(interior, fc.x_valuation)


def psi_polynomial(elements: Iterable[int]) -> UniPoly:
    """lcm(x**a - 1 : a in elements) == prod(phi_d : d divides some element)."""
    elems = sorted(set(elements))
    if not elems:
        raise ValueError("psi polynomial of the empty set is undefined")
    if any(a < 1 for a in elems):
        raise ValueError("psi indices must be positive")
    result = UniPoly.monomial(elems[0]) - UniPoly.one()
    for a in elems[1:]:
        result = lcm(result, UniPoly.monomial(a) - UniPoly.one())
    return result


def psi_inclusion_exclusion(elements: Iterable[int]) -> UniPoly:
    """The same psi polynomial through the alternating gcd-binomial product.

    Odd-size subsets of the maximal elements contribute to the numerator,
    even-size subsets to the denominator; the division is exact.
    """
    from itertools import combinations
    from math import gcd as int_gcd

    maximal = Antichain.from_set(elements).sorted()
    numerator = UniPoly.one()
    denominator = UniPoly.one()
    for size in range(1, len(maximal) + 1):
        for subset in combinations(maximal, size):
            g = 0
            for a in subset:
                g = int_gcd(g, a)
            binom = UniPoly.monomial(g) - UniPoly.one()
            if size % 2:
                numerator = numerator * binom
            else:
                denominator = denominator * binom
    return numerator.exact_div(denominator)


def psi_decompose(f: UniPoly) -> PsiDecomposition:
    """Unique nested psi-power representation of a powered polynomial."""
    if f.is_zero():
        raise ValueError("the zero polynomial is not decomposed")
    fc = factor_cyclotomic(f)
    if fc.residual.degree() != 0 or not exponents_powered(fc.exponents):
        raise ValueError("psi decomposition requires a powered polynomial")
    factors: list[tuple[Antichain, int]] = []
    if fc.exponents:
        levels = sorted(set(fc.exponents.values()))
        previous = 0
        for level in levels:
            stage = {n for n, k in fc.exponents.items() if k >= level}
            factors.append((Antichain.from_set(stage), level - previous))
            previous = level
    return PsiDecomposition(
        factors=tuple(factors), valuation=fc.x_valuation, unit=fc.unit
    )


def downset_bound(f: UniPoly, mode: Literal["star", "circle"]) -> frozenset[int]:
    """Divisor-closed index set containing every psi antichain of the result.

    star: indices n whose full divisor set indexes cyclotomic factors of f.
    circle: all divisors of indices of cyclotomic factors of f.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has no downset bound")
    if mode not in ("star", "circle"):
        raise ValueError(f"unknown mode {mode!r}")
    support = set(factor_cyclotomic(f).exponents)
    if mode == "star":
        return frozenset(
            n for n in support if all(d in support for d in divisors(n))
        )
    out: set[int] = set()
    for n in support:
        out.update(divisors(n))
    return frozenset(out)
