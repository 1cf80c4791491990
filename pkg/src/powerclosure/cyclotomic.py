"""Cyclotomic polynomials and cyclotomic factorization over Q.

``cyclotomic_poly(n)`` is built from the Moebius product
``prod_{d|n} (x**d - 1)**mu(n/d)`` with exact division.  A polynomial over Q
splits as ``unit * x**v * prod(phi_n**k_n) * residual`` where the residual has
nonzero constant term and no cyclotomic factor; ``factor_cyclotomic`` computes
that split by trial division over all candidate indices.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from .field import Scalar
from .unipoly import UniPoly


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius expects a positive integer")
    result = 1
    for _, e in factorize(n).items():
        if e > 1:
            return 0
        result = -result
    return result


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi expects a positive integer")
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    """Sorted list of the positive divisors of n."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


# phi_n values never change, so a racy cache fill is harmless; the lock only
# avoids duplicate work when several threads request the same fresh index.
_PHI_CACHE: dict[int, UniPoly] = {}
_PHI_LOCK = threading.Lock()


def cyclotomic_poly(n: int) -> UniPoly:
    """The n-th cyclotomic polynomial (monic, integer coefficients)."""
    if n < 1:
        raise ValueError("cyclotomic index must be a positive integer")
    cached = _PHI_CACHE.get(n)
    if cached is not None:
        return cached
    with _PHI_LOCK:
        cached = _PHI_CACHE.get(n)
        if cached is not None:
            return cached
        numerator = UniPoly.one()
        denominator = UniPoly.one()
        for d in divisors(n):
            mu = mobius(n // d)
            if mu == 0:
                continue
            binomial = UniPoly.monomial(d) - UniPoly.one()
            if mu == 1:
                numerator = numerator * binomial
            else:
                denominator = denominator * binomial
        phi = numerator.exact_div(denominator)
        _PHI_CACHE[n] = phi
        return phi


_PHI_TABLE: list[int] = [0]


def _phi_table(limit: int) -> list[int]:
    """euler_phi(n) for all n <= limit via a sieve (index 0 unused)."""
    global _PHI_TABLE
    if len(_PHI_TABLE) <= limit:
        table = list(range(limit + 1))
        for p in range(2, limit + 1):
            if table[p] == p:  # p prime
                for k in range(p, limit + 1, p):
                    table[k] -= table[k] // p
        _PHI_TABLE = table
    return _PHI_TABLE


def candidate_indices(degree: int) -> list[tuple[int, int]]:
    """(n, euler_phi(n)) for all n that could index a cyclotomic factor of a
    degree-``degree`` polynomial.

    euler_phi(n) >= sqrt(n/2) bounds the search to n <= 2*degree**2 filtered
    by euler_phi(n) <= degree.
    """
    if degree < 1:
        return []
    bound = 2 * degree * degree
    table = _phi_table(bound)
    return [(n, table[n]) for n in range(1, bound + 1) if table[n] <= degree]


@dataclass(frozen=True)
class CycFactorization:
    """Split ``f = unit * x**x_valuation * prod(phi_n**k_n) * residual``.

    ``exponents`` maps each cyclotomic index with positive multiplicity;
    ``residual`` is monic with nonzero constant term and no cyclotomic factor.
    """

    unit: Scalar
    x_valuation: int
    exponents: dict[int, int]
    residual: UniPoly

    def reconstruct(self) -> UniPoly:
        f = UniPoly.one()
        for n, k in sorted(self.exponents.items()):
            f = f * cyclotomic_poly(n) ** k
        f = f * self.residual
        return (f * self.unit).times_x_power(self.x_valuation)

    def cyclotomic_part(self) -> UniPoly:
        f = UniPoly.one()
        for n, k in sorted(self.exponents.items()):
            f = f * cyclotomic_poly(n) ** k
        return f


def factor_cyclotomic(f: UniPoly) -> CycFactorization:
    """Extract the full cyclotomic part of a nonzero polynomial over Q."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if not f.is_rational():
        raise ValueError("cyclotomic factorization requires rational coefficients")
    v = f.valuation()
    core = UniPoly(f.coeffs[v:])
    unit = core.leading_coefficient()
    core = core.monic()
    exponents: dict[int, int] = {}
    for n, phi_degree in candidate_indices(core.degree()):
        if core.degree() == 0:
            break
        if phi_degree > core.degree():
            continue
        phi = cyclotomic_poly(n)
        while True:
            q, r = core.divrem(phi)
            if not r.is_zero():
                break
            exponents[n] = exponents.get(n, 0) + 1
            core = q
            if core.degree() == 0:
                break
    return CycFactorization(unit=unit, x_valuation=v, exponents=exponents, residual=core)
