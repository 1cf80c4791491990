"""Ideal computations: Groebner bases, membership, closure and interior tests.

Buchberger's algorithm with the normal selection strategy, full
inter-reduction and deterministic tie-breaking yields a canonical reduced
basis, so ideal equality is list comparison.  Laurent ideals are carried by
polynomial generators; membership and equality route through saturation by
the product of the variables (a fresh variable t with t*x1*...*xd - 1 is
eliminated by a block order).

The power-closure of (f1, ..., fn) is generated by the substitutions
``fj(x**i)`` for 1 <= i <= term_count(fj); the same window certifies the
power-closed property, which makes both operations finite Groebner problems.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .multipoly import (
    DEGLEX,
    Exponents,
    MultiPoly,
    TermOrder,
    mono_div,
    mono_lcm,
    mono_mul,
)


class ComputationBudgetExceeded(Exception):
    """Raised when a Groebner computation runs past its deadline."""


@dataclass(frozen=True)
class Ideal:
    generators: tuple[MultiPoly, ...]
    nvars: int
    laurent: bool = False

    def __post_init__(self):
        for g in self.generators:
            if g.is_zero():
                raise ValueError("ideal generators must be nonzero")
            if g.nvars != self.nvars:
                raise ValueError("generator has wrong variable count")

    @classmethod
    def of(cls, gens: Iterable[MultiPoly], laurent: bool = False) -> "Ideal":
        gens = tuple(gens)
        if not gens:
            raise ValueError("need at least one generator")
        return cls(gens, gens[0].nvars, laurent)

    def canonical_key(self):
        return (
            frozenset(g.canonical_key() for g in self.generators),
            self.nvars,
            self.laurent,
        )


def _check_deadline(deadline: Optional[float]):
    if deadline is not None and time.monotonic() > deadline:
        raise ComputationBudgetExceeded("groebner computation exceeded its budget")


def normal_form(f: MultiPoly, basis: Sequence[MultiPoly], order: TermOrder = DEGLEX) -> MultiPoly:
    """Full remainder of f modulo the basis (deterministic reducer choice)."""
    if f.is_zero() or not basis:
        return f
    lead = [(g.leading(order)) for g in basis]
    work = dict(f.terms)
    remainder: dict[Exponents, object] = {}
    while work:
        exps = max(work, key=order.key)
        coeff = work.pop(exps)
        for g, (g_exps, g_lc) in zip(basis, lead):
            quot = mono_div(exps, g_exps)
            if quot is None:
                continue
            scale = coeff / g_lc
            for e2, c2 in g.terms.items():
                if e2 == g_exps:
                    continue
                target = mono_mul(quot, e2)
                acc = work.get(target, 0) - scale * c2
                if acc == 0:
                    work.pop(target, None)
                else:
                    work[target] = acc
            break
        else:
            remainder[exps] = coeff
    return MultiPoly(remainder, f.nvars, f.laurent)


def _spoly(f: MultiPoly, g: MultiPoly, order: TermOrder) -> MultiPoly:
    fe, fc = f.leading(order)
    ge, gc = g.leading(order)
    lcm = mono_lcm(fe, ge)
    mf = MultiPoly.monomial(mono_div(lcm, fe), f.nvars, Fraction(1) / fc)
    mg = MultiPoly.monomial(mono_div(lcm, ge), g.nvars, Fraction(1) / gc)
    return mf * f - mg * g


def _interreduce(basis: list[MultiPoly], order: TermOrder) -> list[MultiPoly]:
    # minimal basis: drop elements whose leading term another one divides
    basis = sorted(basis, key=lambda g: order.key(g.leading(order)[0]))
    minimal: list[MultiPoly] = []
    leads = []
    for g in basis:
        ge = g.leading(order)[0]
        if any(mono_div(ge, other) is not None for other in leads):
            continue
        minimal.append(g)
        leads.append(ge)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        h = normal_form(g, others, order)
        if not h.is_zero():
            reduced.append(h.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]))
    return reduced


def _reduce_input(gens: list[MultiPoly], order: TermOrder) -> list[MultiPoly]:
    """Mutually reduce a generating set without changing the ideal.

    Unlike minimalization this only drops a generator when it reduces to zero
    against the others, which is safe before a Groebner basis exists.
    """
    gens = sorted(set(gens), key=lambda g: order.key(g.leading(order)[0]))
    changed = True
    while changed:
        changed = False
        for i in range(len(gens)):
            g = gens[i]
            if g is None:
                continue
            others = [h for j, h in enumerate(gens) if j != i and h is not None]
            if not others:
                continue
            h = normal_form(g, others, order)
            if h.is_zero():
                gens[i] = None
                changed = True
            elif h != g:
                gens[i] = h.monic(order)
                changed = True
        gens = [g for g in gens if g is not None]
    return sorted(gens, key=lambda g: order.key(g.leading(order)[0]))


def buchberger(
    gens: Sequence[MultiPoly],
    order: TermOrder = DEGLEX,
    deadline: Optional[float] = None,
) -> tuple[MultiPoly, ...]:
    """Reduced monic Groebner basis, canonical for (ideal, order)."""
    basis = [g.as_polynomial().monic(order) for g in gens if not g.is_zero()]
    if not basis:
        return ()
    basis = _reduce_input(basis, order)
    lead = [g.leading(order)[0] for g in basis]
    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    while pairs:
        _check_deadline(deadline)
        i, j = min(
            pairs,
            key=lambda p: (order.key(mono_lcm(lead[p[0]], lead[p[1]])), p),
        )
        pairs.remove((i, j))
        lcm = mono_lcm(lead[i], lead[j])
        # product criterion: coprime leading terms reduce to zero
        if lcm == mono_mul(lead[i], lead[j]):
            continue
        # chain criterion: a third element dividing the lcm with both its
        # pairs already handled makes this pair redundant
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or mono_div(lcm, lead[k]) is None:
                continue
            if (min(i, k), max(i, k)) not in pairs and (
                min(j, k),
                max(j, k),
            ) not in pairs:
                skip = True
                break
        if skip:
            continue
        h = normal_form(_spoly(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            continue
        h = h.monic(order)
        he = h.leading(order)[0]
        new_index = len(basis)
        basis.append(h)
        lead.append(he)
        pairs.update((k, new_index) for k in range(new_index))
    return tuple(_interreduce(basis, order))


_GB_CACHE: dict[tuple, tuple[MultiPoly, ...]] = {}
_GB_CACHE_LIMIT = 4096


def _cached_buchberger(
    gens: tuple[MultiPoly, ...], order: TermOrder, deadline: Optional[float]
) -> tuple[MultiPoly, ...]:
    key = (frozenset(g.canonical_key() for g in gens), order.signature())
    cached = _GB_CACHE.get(key)
    if cached is None:
        cached = buchberger(gens, order, deadline)
        if len(_GB_CACHE) < _GB_CACHE_LIMIT:
            _GB_CACHE[key] = cached
    return cached


def groebner_basis(
    ideal: Ideal, order: TermOrder = DEGLEX, deadline: Optional[float] = None
) -> tuple[MultiPoly, ...]:
    """Cached reduced basis of a polynomial-mode ideal."""
    if ideal.laurent:
        raise ValueError("Laurent ideals are handled through laurent_saturate")
    return _cached_buchberger(ideal.generators, order, deadline)


def _product_of_variables(nvars: int) -> MultiPoly:
    return MultiPoly.monomial((1,) * nvars, nvars)


def _eliminate_last(
    gens: Sequence[MultiPoly],
    order: TermOrder,
    deadline: Optional[float] = None,
) -> list[MultiPoly]:
    """Generators of the contraction after dropping one trailing variable."""
    elim_order = TermOrder(order.kind, order.priority, elim_tail=1)
    basis = _cached_buchberger(tuple(gens), elim_order, deadline)
    nvars = gens[0].nvars - 1
    kept = []
    for g in basis:
        if all(e[-1] == 0 for e in g.terms):
            kept.append(g.project(nvars))
    return kept


def laurent_saturate(ideal: Ideal, deadline: Optional[float] = None) -> Ideal:
    """Polynomial contraction of the Laurent ideal: (I : (x1*...*xd)**inf).

    A fresh variable t with t*x1*...*xd - 1 is adjoined and eliminated; the
    result carries Laurent membership and equality questions.
    """
    gens = []
    for g in ideal.generators:
        if g.laurent:
            from .multipoly import laurent_normalize

            g, _unit = laurent_normalize(g)
        gens.append(g.extend(1))
    nvars = ideal.nvars
    t = MultiPoly.variable(nvars, nvars + 1)
    relation = t * _product_of_variables(nvars).extend(1) - 1
    projected = _eliminate_last(gens + [relation], DEGLEX, deadline)
    if not projected:
        raise ValueError("saturation produced the zero ideal unexpectedly")
    return Ideal(tuple(projected), nvars, laurent=False)


def _membership_basis(
    ideal: Ideal, order: TermOrder, deadline: Optional[float] = None
) -> tuple[MultiPoly, ...]:
    if ideal.laurent:
        return groebner_basis(laurent_saturate(ideal, deadline), order, deadline)
    return groebner_basis(ideal, order, deadline)


def member(
    f: MultiPoly,
    ideal: Ideal,
    order: TermOrder = DEGLEX,
    deadline: Optional[float] = None,
) -> bool:
    """Ideal membership; Laurent mode tests the saturated contraction."""
    if f.is_zero():
        return True
    if f.nvars != ideal.nvars:
        raise ValueError("variable counts differ")
    if f.laurent:
        if not ideal.laurent:
            raise ValueError("Laurent element against polynomial ideal")
        from .multipoly import laurent_normalize

        f, _unit = laurent_normalize(f)
    basis = _membership_basis(ideal, order, deadline)
    if not basis:
        return False
    return normal_form(f, basis, order).is_zero()


def equal(I: Ideal, J: Ideal, order: TermOrder = DEGLEX) -> bool:
    """Ideal equality through canonical reduced bases (mode-aware)."""
    if I.nvars != J.nvars or I.laurent != J.laurent:
        return False
    return _membership_basis(I, order) == _membership_basis(J, order)


def power_closure(ideal: Ideal) -> Ideal:
    """Generators of the smallest power-closed ideal containing the input.

    Each generator contributes its substitutions f(x**i) for i up to its
    monomial count; in Laurent mode the same window starting at 1 is a valid
    (canonical) choice.
    """
    gens = []
    for f in ideal.generators:
        for i in range(1, f.term_count + 1):
            gens.append(f.power_substitute(i))
    return Ideal(tuple(gens), ideal.nvars, ideal.laurent)


def is_power_closed(ideal: Ideal, deadline: Optional[float] = None) -> bool:
    """True when every generator's substitution window stays inside the ideal."""
    for f in ideal.generators:
        for i in range(2, f.term_count + 1):
            if not member(f.power_substitute(i), ideal, deadline=deadline):
                return False
    return True


def intersect(I: Ideal, J: Ideal, deadline: Optional[float] = None) -> Ideal:
    """Generators of the intersection via elimination of a fresh variable t:
    I cap J = (t*I + (1-t)*J) cap R."""
    if I.nvars != J.nvars or I.laurent != J.laurent:
        raise ValueError("intersection requires matching rings")
    if I.laurent:
        I, J = laurent_saturate(I, deadline), laurent_saturate(J, deadline)
        result = intersect(I, J, deadline)
        return Ideal(result.generators, result.nvars, laurent=True)
    nvars = I.nvars
    t = MultiPoly.variable(nvars, nvars + 1)
    gens = [t * f.extend(1) for f in I.generators]
    gens += [(1 - t) * g.extend(1) for g in J.generators]
    projected = _eliminate_last(gens, DEGLEX, deadline)
    if not projected:
        raise ValueError("intersection of nonzero ideals cannot be zero")
    return Ideal(tuple(projected), nvars, laurent=False)


def product(I: Ideal, J: Ideal) -> Ideal:
    if I.nvars != J.nvars or I.laurent != J.laurent:
        raise ValueError("product requires matching rings")
    gens = tuple(f * g for f in I.generators for g in J.generators)
    return Ideal(gens, I.nvars, I.laurent)


def power(I: Ideal, n: int) -> Ideal:
    if n < 1:
        raise ValueError("ideal power expects n >= 1")
    result = I
    for _ in range(n - 1):
        result = product(result, I)
    return result


def add(I: Ideal, J: Ideal) -> Ideal:
    if I.nvars != J.nvars or I.laurent != J.laurent:
        raise ValueError("sum requires matching rings")
    return Ideal(I.generators + J.generators, I.nvars, I.laurent)


def bounded_power_interior(
    ideal: Ideal, f: MultiPoly, bound: int, deadline: Optional[float] = None
) -> bool:
    """Necessary-condition test for membership in the power-interior:
    f(x**i) must lie in the ideal for every 1 <= i <= bound."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    return all(
        member(f.power_substitute(i), ideal, deadline=deadline)
        for i in range(1, bound + 1)
    )


def radical_member(
    f: MultiPoly, ideal: Ideal, deadline: Optional[float] = None
) -> bool:
    """f in sqrt(I) iff 1 in I + (t*f - 1) in the extended ring."""
    if ideal.laurent:
        raise ValueError("radical membership is a polynomial-mode operation")
    if f.is_zero():
        return True
    nvars = ideal.nvars
    t = MultiPoly.variable(nvars, nvars + 1)
    gens = [g.extend(1) for g in ideal.generators]
    gens.append(t * f.extend(1) - 1)
    basis = _cached_buchberger(tuple(gens), DEGLEX, deadline)
    return len(basis) == 1 and basis[0].is_constant()


def triangular_closure_generators(coeffs: Sequence) -> list[MultiPoly]:
    """Alternative generating set for the closure of one linear form.

    Row-reducing the substitution generators of ``a1*x1 + ... + ad*xd`` (the
    variables viewed as the coefficient matrix) leaves the triangular system
    ``g_j = sum_{i>=j} a_i x_i (x_i - x_1) ... (x_i - x_{j-1})``.
    """
    nvars = len(coeffs)
    out = []
    for j in range(1, nvars + 1):
        g = MultiPoly.zero(nvars)
        for i in range(j - 1, nvars):
            term = MultiPoly.variable(i, nvars) * coeffs[i]
            for m in range(j - 1):
                term = term * (
                    MultiPoly.variable(i, nvars) - MultiPoly.variable(m, nvars)
                )
            g = g + term
        if not g.is_zero():
            out.append(g)
    return out
