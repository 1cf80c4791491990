"""Classification of principal power-closed ideals from factored input.

A principal ideal (f) is power-closed exactly when f is, up to a unit, a
product of univariate powered polynomials evaluated at distinct monomial
fractions xi = x**q / x**p built from primitive exponent pairs; in the
polynomial ring a monomial prefactor is also allowed.  The classifier takes
the factored form ``unit * prod (xi_i - rho_ij)**m_ij`` (general multivariate
factorization is out of scope), orients every fraction positively under the
active term order, groups factors by fraction, and reduces each group to the
univariate powered test on cyclotomic multiplicities.

Roots of unity are carried symbolically as (order, index) pairs so the
coefficient field never needs to contain them; expansion back to an explicit
polynomial is available whenever the needed roots live in Q or one quadratic
extension, or when a group is conjugate-complete (then the homogenized
cyclotomic polynomial expands it over Q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Optional, Sequence, Union

from .cyclotomic import cyclotomic_poly, euler_phi
from .field import QuadExt, Scalar, root_of_unity_order
from .multipoly import DEGLEX, Exponents, MultiPoly, TermOrder
from .powerpoly import exponents_powered
from .unipoly import UniPoly


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2*pi*i * index/order), stored in lowest terms."""

    order: int
    index: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if not 0 <= self.index < self.order:
            raise ValueError("index must satisfy 0 <= index < order")
        if self.order > 1 and int_gcd(self.index, self.order) != 1:
            raise ValueError("index must be coprime to the order")
        if self.order == 1 and self.index != 0:
            raise ValueError("order 1 admits only index 0")

    @classmethod
    def of_power(cls, order: int, index: int) -> "RootOfUnity":
        """zeta_order ** index reduced to lowest terms."""
        if order < 1:
            raise ValueError("order must be positive")
        index %= order
        g = int_gcd(index, order)
        if index == 0:
            return cls(1, 0)
        return cls(order // g, index // g)

    @classmethod
    def from_scalar(cls, c: Scalar) -> Optional["RootOfUnity"]:
        n = root_of_unity_order(c)
        if n is None:
            return None
        for k in range(n):
            if int_gcd(k, n) == 1 or n == 1:
                candidate = cls(n, k)
                if candidate.value() == c:
                    return candidate
        return None

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity.of_power(self.order, -self.index)

    def value(self) -> Optional[Scalar]:
        """Exact field value for orders 1, 2, 3, 4, 6; None otherwise."""
        if self.order == 1:
            return Fraction(1)
        if self.order == 2:
            return Fraction(-1)
        if self.order == 4:
            return QuadExt(0, 1 if self.index == 1 else -1, -1)
        if self.order == 3:
            return QuadExt(Fraction(-1, 2), Fraction(1 if self.index == 1 else -1, 2), -3)
        if self.order == 6:
            return QuadExt(Fraction(1, 2), Fraction(1 if self.index == 1 else -1, 2), -3)
        return None

    def __str__(self):
        return f"zeta({self.order},{self.index})"


Rho = Union[RootOfUnity, Fraction, QuadExt]


@dataclass(frozen=True)
class ExponentPair:
    """Monomial fraction x**num / x**den with disjoint, nonnegative supports."""

    num: Exponents
    den: Exponents

    def __post_init__(self):
        if len(self.num) != len(self.den):
            raise ValueError("exponent vectors differ in length")
        for a, b in zip(self.num, self.den):
            if a < 0 or b < 0:
                raise ValueError("fraction exponents must be nonnegative")
            if a and b:
                raise ValueError("numerator and denominator supports overlap")

    @property
    def nvars(self) -> int:
        return len(self.num)

    def inverse(self) -> "ExponentPair":
        return ExponentPair(self.den, self.num)

    def is_positive(self, order: TermOrder = DEGLEX) -> bool:
        return order.key(self.num) > order.key(self.den)

    def is_primitive(self) -> bool:
        return is_primitive_pair(self.num, self.den)

    def __str__(self):
        from .render import default_names, _monomial_str

        names = default_names(self.nvars)
        top = _monomial_str(self.num, names) or "1"
        bottom = _monomial_str(self.den, names)
        return f"{top}/{bottom}" if bottom else top


def is_primitive_pair(p: Sequence[int], q: Sequence[int]) -> bool:
    """Disjoint supports and overall coordinate gcd 1."""
    if len(p) != len(q):
        raise ValueError("exponent vectors differ in length")
    g = 0
    for a, b in zip(p, q):
        if a and b:
            return False
        g = int_gcd(g, int_gcd(abs(a), abs(b)))
    return g == 1


@dataclass(frozen=True)
class Factor:
    xi: ExponentPair
    rho: Rho
    multiplicity: int = 1

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if not isinstance(self.rho, RootOfUnity) and self.rho == 0:
            raise ValueError("rho must be nonzero")


@dataclass(frozen=True)
class FactoredPrincipal:
    """``unit_scalar * x**unit_monomial * prod (xi - rho)**multiplicity``."""

    unit_scalar: Scalar
    unit_monomial: Exponents
    factors: tuple[Factor, ...]
    nvars: int

    def __post_init__(self):
        if self.unit_scalar == 0:
            raise ValueError("unit scalar must be nonzero")
        for f in self.factors:
            if f.xi.nvars != self.nvars:
                raise ValueError("factor variable count mismatch")


def _two_term_split(b: MultiPoly) -> tuple[Exponents, Exponents, Scalar]:
    """(plus-exponent, minus-exponent, scale) for b == scale*(x**a - x**b)."""
    if len(b.terms) != 2:
        raise ValueError("not a binomial: expected exactly two monomials")
    (e1, c1), (e2, c2) = sorted(b.terms.items(), key=lambda t: DEGLEX.key(t[0]), reverse=True)
    if c1 + c2 != 0:
        raise ValueError("not a difference of two monomials")
    # orient the positively-signed monomial first when signs are comparable
    if isinstance(c1, Fraction) and c1 < 0:
        e1, e2, c1 = e2, e1, c2
    return e1, e2, c1


def binomial_irreducible(b: MultiPoly) -> bool:
    """Irreducibility of a monomial difference (content removed first)."""
    plus, minus, _ = _two_term_split(b)
    shift = tuple(min(a, c) for a, c in zip(plus, minus))
    p = tuple(a - s for a, s in zip(plus, shift))
    q = tuple(c - s for c, s in zip(minus, shift))
    return is_primitive_pair(p, q)


def binomial_factor(b: MultiPoly) -> FactoredPrincipal:
    """Factor a monomial difference into irreducible fraction-root factors.

    With primitive part (q'', p'') and exponent gcd h, the binomial splits as
    the product of (x**q'' - zeta_h**i x**p'') over i = 0..h-1, times the
    monomial content and the leading scalar.
    """
    plus, minus, scale = _two_term_split(b)
    shift = tuple(min(a, c) for a, c in zip(plus, minus))
    q = tuple(a - s for a, s in zip(plus, shift))
    p = tuple(c - s for c, s in zip(minus, shift))
    h = 0
    for entry in q + p:
        h = int_gcd(h, entry)
    if h == 0:
        raise ValueError("binomial degenerates to zero")
    q2 = tuple(e // h for e in q)
    p2 = tuple(e // h for e in p)
    factors = tuple(
        Factor(ExponentPair(q2, p2), RootOfUnity.of_power(h, i)) for i in range(h)
    )
    return FactoredPrincipal(
        unit_scalar=scale, unit_monomial=shift, factors=factors, nvars=b.nvars
    )


def _rho_inverse(rho: Rho) -> Rho:
    if isinstance(rho, RootOfUnity):
        return rho.inverse()
    return 1 / rho


def associates(f1: tuple[ExponentPair, Rho], f2: tuple[ExponentPair, Rho]) -> bool:
    """Two irreducibles (xi - rho) generate the same ideal iff they are equal
    or one is the inverted pair (xi**-1 - rho**-1) of the other."""
    xi1, rho1 = f1
    xi2, rho2 = f2
    if xi1 == xi2 and _rho_eq(rho1, rho2):
        return True
    return xi1.inverse() == xi2 and _rho_eq(_rho_inverse(rho1), rho2)


def _rho_eq(a: Rho, b: Rho) -> bool:
    if isinstance(a, RootOfUnity) != isinstance(b, RootOfUnity):
        if isinstance(b, RootOfUnity):
            a, b = b, a
        # a RootOfUnity vs scalar b
        value = a.value()
        return value is not None and value == b
    return a == b


@dataclass(frozen=True)
class GroupReport:
    xi: ExponentPair
    exponents: tuple[tuple[int, int], ...]  # (cyclotomic index, multiplicity)
    powered: bool
    note: str = ""


@dataclass(frozen=True)
class Classification:
    power_closed: bool
    witness: Optional[str]
    groups: tuple[GroupReport, ...]


def _orient(factor: Factor, order: TermOrder) -> Factor:
    if factor.xi.is_positive(order):
        return factor
    return Factor(factor.xi.inverse(), _rho_inverse(factor.rho), factor.multiplicity)


def classify_principal(
    fp: FactoredPrincipal,
    ring: str = "laurent",
    order: TermOrder = DEGLEX,
) -> Classification:
    """Decide whether the principal ideal of the factored input is power-closed.

    Verdict: every rho must be a root of unity, the roots attached to one
    fraction must form complete conjugate packages with uniform multiplicity,
    and each fraction's cyclotomic multiplicity map must be divisor-monotone.
    The monomial prefactor is a unit in Laurent mode and allowed by the
    polynomial-mode characterization.
    """
    if ring not in ("poly", "laurent"):
        raise ValueError(f"unknown ring mode {ring!r}")
    if ring == "poly" and any(e < 0 for e in fp.unit_monomial):
        raise ValueError("negative unit monomial outside Laurent mode")

    merged: dict[tuple[ExponentPair, Rho], int] = {}
    for factor in fp.factors:
        if not factor.xi.is_primitive():
            raise ValueError(f"fraction {factor.xi} is not a primitive pair")
        f = _orient(factor, order)
        key = (f.xi, f.rho)
        merged[key] = merged.get(key, 0) + f.multiplicity

    groups: dict[ExponentPair, list[tuple[Rho, int]]] = {}
    for (xi, rho), mult in merged.items():
        groups.setdefault(xi, []).append((rho, mult))

    reports: list[GroupReport] = []
    witness: Optional[str] = None
    verdict = True
    for xi in sorted(groups, key=lambda e: (e.num, e.den)):
        items = groups[xi]
        by_order: dict[int, dict[int, int]] = {}
        bad: Optional[str] = None
        for rho, mult in items:
            if not isinstance(rho, RootOfUnity):
                converted = RootOfUnity.from_scalar(rho)
                if converted is None:
                    bad = f"factor ({xi} - {rho}) has a root that is not a root of unity"
                    break
                rho = converted
            by_order.setdefault(rho.order, {})[rho.index] = (
                by_order.get(rho.order, {}).get(rho.index, 0) + mult
            )
        if bad is not None:
            reports.append(GroupReport(xi, (), False, bad))
            verdict = False
            witness = witness or bad
            continue
        exponent_map: dict[int, int] = {}
        for n, index_map in sorted(by_order.items()):
            expected = euler_phi(n) if n > 2 else 1
            mults = set(index_map.values())
            if len(index_map) != expected or len(mults) != 1:
                bad = (
                    f"group {xi}: conjugate order-{n} roots are incomplete or "
                    "carry unequal multiplicities"
                )
                break
            exponent_map[n] = mults.pop()
        if bad is not None:
            reports.append(
                GroupReport(xi, tuple(sorted(exponent_map.items())), False, bad)
            )
            verdict = False
            witness = witness or bad
            continue
        powered = exponents_powered(exponent_map)
        note = "" if powered else "cyclotomic multiplicities fail divisor-monotonicity"
        reports.append(
            GroupReport(xi, tuple(sorted(exponent_map.items())), powered, note)
        )
        if not powered:
            verdict = False
            witness = witness or f"group {xi}: {note}"
    return Classification(verdict, witness, tuple(reports))


def group_polynomial(report: GroupReport) -> UniPoly:
    """The univariate polynomial prod(phi_n**m) attached to one fraction."""
    f = UniPoly.one()
    for n, m in report.exponents:
        f = f * cyclotomic_poly(n) ** m
    return f


def _homogenized_cyclotomic(n: int, q: Exponents, p: Exponents, nvars: int) -> MultiPoly:
    """prod over primitive n-th roots of (x**q - zeta x**p), expanded over Q."""
    phi = cyclotomic_poly(n)
    d = phi.degree()
    terms: dict[Exponents, Scalar] = {}
    for j in range(d + 1):
        c = phi.coefficient(j)
        if c == 0:
            continue
        exps = tuple(j * a + (d - j) * b for a, b in zip(q, p))
        terms[exps] = terms.get(exps, Fraction(0)) + c
    return MultiPoly(terms, nvars, laurent=True)


def expand_factored(fp: FactoredPrincipal) -> MultiPoly:
    """Multiply the factored form back out (Laurent-mode result).

    Conjugate-complete groups expand over Q through homogenized cyclotomic
    polynomials; leftover symbolic roots need an embedding into Q, Q(i) or
    Q(sqrt(-3)), otherwise a ValueError explains the limitation.
    """
    result = MultiPoly.monomial(fp.unit_monomial, fp.nvars, fp.unit_scalar, laurent=True)
    per_xi: dict[ExponentPair, dict] = {}
    scalar_factors: list[tuple[ExponentPair, Scalar, int]] = []
    for factor in fp.factors:
        if isinstance(factor.rho, RootOfUnity):
            bucket = per_xi.setdefault(factor.xi, {})
            key = (factor.rho.order, factor.rho.index)
            bucket[key] = bucket.get(key, 0) + factor.multiplicity
        else:
            scalar_factors.append((factor.xi, factor.rho, factor.multiplicity))

    for xi, bucket in per_xi.items():
        orders = {n for n, _ in bucket}
        for n in sorted(orders):
            indices = {k: m for (order_, k), m in bucket.items() if order_ == n}
            expected = euler_phi(n) if n > 2 else 1
            mults = set(indices.values())
            if len(indices) == expected and len(mults) == 1:
                block = _homogenized_cyclotomic(n, xi.num, xi.den, fp.nvars)
                result = result * block ** mults.pop()
            else:
                for k, m in sorted(indices.items()):
                    value = RootOfUnity(n, k).value()
                    if value is None:
                        raise ValueError(
                            f"cannot expand an incomplete package of order-{n} roots"
                        )
                    scalar_factors.append((xi, value, m))

    for xi, value, mult in scalar_factors:
        base = MultiPoly.monomial(xi.num, fp.nvars, 1, laurent=True) - (
            MultiPoly.monomial(xi.den, fp.nvars, value, laurent=True)
        )
        result = result * base**mult
    return result


def expanded_support_divisibility(fp: FactoredPrincipal) -> bool:
    """Check that the expansion divides prod_{i<k} (x**p_k - x**p_i) where the
    p_i run over its own support sorted by the term order (Laurent sense)."""
    from .multipoly import laurent_normalize

    f = expand_factored(fp)
    exps = sorted(f.terms, key=DEGLEX.key)
    top = exps[-1]
    product = MultiPoly.constant(1, fp.nvars, laurent=True)
    for e in exps[:-1]:
        product = product * (
            MultiPoly.monomial(top, fp.nvars, 1, laurent=True)
            - MultiPoly.monomial(e, fp.nvars, 1, laurent=True)
        )
    f_norm, _ = laurent_normalize(f)
    product_norm, _ = laurent_normalize(product)
    return exact_monomial_division(product_norm, f_norm) is not None


def exact_monomial_division(
    f: MultiPoly, g: MultiPoly, order: TermOrder = DEGLEX
) -> Optional[MultiPoly]:
    """f / g as a polynomial, or None when g does not divide f exactly."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    from .multipoly import mono_div, mono_mul

    quotient: dict[Exponents, Scalar] = {}
    work = dict(f.terms)
    g_exps, g_lc = g.leading(order)
    while work:
        exps = max(work, key=order.key)
        quot = mono_div(exps, g_exps)
        if quot is None:
            return None
        scale = work[exps] / g_lc
        quotient[quot] = scale
        for e2, c2 in g.terms.items():
            target = mono_mul(quot, e2)
            acc = work.get(target, Fraction(0)) - scale * c2
            if acc == 0:
                work.pop(target, None)
            else:
                work[target] = acc
    return MultiPoly(quotient, f.nvars, f.laurent)
