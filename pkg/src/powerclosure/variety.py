"""Zero-locus and radical structure of power-closures.

For a linear form the zero locus of the closure is a union of coordinate
lines indexed by zero-sum subsets of the coefficients; intersecting the line
ideals yields the radical.  Binomials cut out subgroups of the torus that are
classified by the Smith normal form of their exponent lattices; Hermite
normal form keeps lattice bases canonical.  Vanishing ideals of points with
root-of-unity coordinates come from the relation lattice of the exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Optional, Sequence

from .ideal import Ideal, intersect as ideal_intersect
from .multipoly import MultiPoly
from .principal import RootOfUnity, _two_term_split
from .unipoly import UniPoly


# -- integer matrices -------------------------------------------------------


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Canonical row-style HNF basis of the lattice spanned by ``rows``.

    Row echelon over Z with positive pivots and entries above each pivot
    reduced into [0, pivot); zero rows are dropped.
    """
    work = [list(r) for r in rows]
    if not work:
        return ()
    cols = len(work[0])
    if any(len(r) != cols for r in work):
        raise ValueError("ragged matrix")
    pivot_row = 0
    for col in range(cols):
        # clear the column below pivot_row by gcd steps
        while True:
            nonzero = [i for i in range(pivot_row, len(work)) if work[i][col]]
            if not nonzero:
                break
            i_min = min(nonzero, key=lambda i: abs(work[i][col]))
            work[pivot_row], work[i_min] = work[i_min], work[pivot_row]
            pivot = work[pivot_row][col]
            done = True
            for i in range(pivot_row + 1, len(work)):
                q = work[i][col] // pivot
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[pivot_row])]
                if work[i][col]:
                    done = False
            if done:
                break
        if pivot_row < len(work) and work[pivot_row][col]:
            if work[pivot_row][col] < 0:
                work[pivot_row] = [-a for a in work[pivot_row]]
            pivot = work[pivot_row][col]
            for i in range(pivot_row):
                q = work[i][col] // pivot
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[pivot_row])]
            pivot_row += 1
    return tuple(tuple(r) for r in work[:pivot_row])


def lattice_contains(basis: Sequence[Sequence[int]], vector: Sequence[int]) -> bool:
    """Membership of an integer vector in the row span (over Z) of ``basis``."""
    hnf = hermite_normal_form(basis)
    v = list(vector)
    for row in hnf:
        col = next((j for j, a in enumerate(row) if a), None)
        if col is None:
            continue
        if v[col] % row[col] == 0:
            q = v[col] // row[col]
            if q:
                v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def smith_normal_form_diagonal(rows: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form (positive entries, each dividing the next)."""
    work = [list(r) for r in rows]
    if not work or not work[0]:
        return []
    diag: list[int] = []
    while work and any(any(r) for r in work):
        # move a nonzero entry of least magnitude to the corner
        best = None
        for i, row in enumerate(work):
            for j, a in enumerate(row):
                if a and (best is None or abs(a) < abs(best[2])):
                    best = (i, j, a)
        i, j, _ = best
        work[0], work[i] = work[i], work[0]
        for row in work:
            row[0], row[j] = row[j], row[0]
        corner = work[0][0]
        reduced = False
        for i in range(1, len(work)):
            q = work[i][0] // corner
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[0])]
            if work[i][0]:
                reduced = True
        if reduced:
            continue
        for j in range(1, len(work[0])):
            q = work[0][j] // corner
            if q:
                for row in work:
                    row[j] -= q * row[0]
            if work[0][j]:
                reduced = True
        if reduced:
            continue
        # corner must divide every remaining entry for the SNF chain
        offender = None
        for i in range(1, len(work)):
            for j in range(1, len(work[i])):
                if work[i][j] % corner:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            work[0] = [a + b for a, b in zip(work[0], work[offender])]
            continue
        diag.append(abs(corner))
        work = [row[1:] for row in work[1:]]
    return diag


def integer_kernel(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Basis of {v : A v = 0} over Z via column reduction with a recorded
    unimodular transform."""
    work = [list(r) for r in rows]
    if not work:
        raise ValueError("kernel of an empty matrix is ambiguous")
    cols = len(work[0])
    transform = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def col_op(j, k, q):  # column_j -= q * column_k
        for row in work:
            row[j] -= q * row[k]
        for row in transform:
            row[j] -= q * row[k]

    def col_swap(j, k):
        for row in work:
            row[j], row[k] = row[k], row[j]
        for row in transform:
            row[j], row[k] = row[k], row[j]

    pivot_col = 0
    for r in range(len(work)):
        while True:
            nonzero = [j for j in range(pivot_col, cols) if work[r][j]]
            if not nonzero:
                break
            j_min = min(nonzero, key=lambda j: abs(work[r][j]))
            col_swap(pivot_col, j_min)
            done = True
            for j in range(pivot_col + 1, cols):
                q = work[r][j] // work[r][pivot_col]
                if q:
                    col_op(j, pivot_col, q)
                if work[r][j]:
                    done = False
            if done:
                break
        if pivot_col < cols and work[r][pivot_col]:
            pivot_col += 1
    kernel = []
    for j in range(pivot_col, cols):
        vec = tuple(transform[i][j] for i in range(cols))
        if any(vec):
            kernel.append(vec)
    return kernel


# -- torus subgroups ---------------------------------------------------------


@dataclass(frozen=True)
class TorusSubgroup:
    """Subgroup {w in T**d : w**v = 1 for all v in the lattice} with a
    canonical HNF lattice basis."""

    nvars: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, nvars: int, rows: Sequence[Sequence[int]]) -> "TorusSubgroup":
        return cls(nvars, hermite_normal_form(rows))


def torus_subgroup(binomial: MultiPoly) -> TorusSubgroup:
    """Solution subgroup in the torus of one binomial equation."""
    plus, minus, _ = _two_term_split(binomial)
    delta = tuple(a - b for a, b in zip(plus, minus))
    return TorusSubgroup.of(binomial.nvars, [delta])


def subgroup_iso_type(group: TorusSubgroup) -> tuple[int, tuple[int, ...]]:
    """(torus rank, nontrivial cyclic invariants) via Smith normal form."""
    diag = smith_normal_form_diagonal(group.basis)
    rank = len([d for d in diag if d])
    torus_rank = group.nvars - rank
    invariants = tuple(d for d in diag if d > 1)
    return torus_rank, invariants


def subgroup_intersect(g: TorusSubgroup, h: TorusSubgroup) -> TorusSubgroup:
    """Intersection of subgroups = subgroup of the lattice sum."""
    if g.nvars != h.nvars:
        raise ValueError("ambient dimensions differ")
    return TorusSubgroup.of(g.nvars, list(g.basis) + list(h.basis))


def subgroup_contains(g: TorusSubgroup, h: TorusSubgroup) -> bool:
    """g >= h as subgroups, i.e. g's lattice lies inside h's lattice."""
    if g.nvars != h.nvars:
        raise ValueError("ambient dimensions differ")
    if not g.basis:
        return True
    return all(lattice_contains(h.basis, row) for row in g.basis)


def dedupe_union(groups: Sequence[TorusSubgroup]) -> list[TorusSubgroup]:
    """Drop members of a finite union absorbed by a larger listed subgroup."""
    kept: list[TorusSubgroup] = []
    for g in groups:
        if any(subgroup_contains(other, g) for other in kept):
            continue
        kept = [other for other in kept if not subgroup_contains(g, other)]
        kept.append(g)
    return kept


# -- lines and radicals for linear closures ---------------------------------


@dataclass(frozen=True)
class LineFamily:
    """Zero-sum subsets A of {1..d}; each names the line spanned by
    sum of the unit vectors over A."""

    nvars: int
    subsets: tuple[frozenset[int], ...]


def zero_sum_lines(coeffs: Sequence) -> LineFamily:
    """All nonempty subsets of coordinates whose coefficients sum to zero."""
    d = len(coeffs)
    if d == 0 or all(c == 0 for c in coeffs):
        raise ValueError("coefficient vector must be nonzero")
    if d > 24:
        raise ValueError("subset enumeration bounded at 24 variables")
    subsets = []
    for mask in range(1, 1 << d):
        total = sum(coeffs[i] for i in range(d) if mask >> i & 1)
        if total == 0:
            subsets.append(frozenset(i + 1 for i in range(d) if mask >> i & 1))
    subsets.sort(key=lambda s: (len(s), sorted(s)))
    return LineFamily(d, tuple(subsets))


def line_ideal(subset: frozenset[int], nvars: int) -> Ideal:
    """Vanishing prime of the line {t * sum_{i in A} e_i}: the variables off
    the subset plus consecutive differences along it (a path)."""
    members = sorted(subset)
    gens = [
        MultiPoly.variable(j, nvars)
        for j in range(nvars)
        if j + 1 not in subset
    ]
    gens += [
        MultiPoly.variable(members[i] - 1, nvars)
        - MultiPoly.variable(members[i + 1] - 1, nvars)
        for i in range(len(members) - 1)
    ]
    if not gens:
        raise ValueError("the full line in one variable has zero vanishing ideal")
    return Ideal.of(gens)


def maximal_ideal(nvars: int) -> Ideal:
    return Ideal.of([MultiPoly.variable(j, nvars) for j in range(nvars)])


def linear_closure_components(coeffs: Sequence) -> list[Ideal]:
    """Component primes of the zero locus of the closure of a linear form.

    Variables with zero coefficient are absent from every substitution
    generator, hence free: components only constrain the support.  Each
    zero-sum subset A of the support contributes the prime generated by the
    support variables off A and a path of differences along A; with no
    zero-sum subset the locus is cut out by the support variables alone.
    """
    d = len(coeffs)
    support = [j for j in range(d) if coeffs[j] != 0]
    if not support:
        raise ValueError("coefficient vector must be nonzero")
    if len(support) > 24:
        raise ValueError("subset enumeration bounded at 24 variables")
    components: list[Ideal] = []
    for mask in range(1, 1 << len(support)):
        picked = [support[i] for i in range(len(support)) if mask >> i & 1]
        if sum(coeffs[j] for j in picked) != 0:
            continue
        gens = [
            MultiPoly.variable(j, d) for j in support if j not in picked
        ]
        gens += [
            MultiPoly.variable(picked[i], d) - MultiPoly.variable(picked[i + 1], d)
            for i in range(len(picked) - 1)
        ]
        components.append(Ideal.of(gens))
    if not components:
        components.append(Ideal.of([MultiPoly.variable(j, d) for j in support]))
    return components


def radical_of_linear_closure(coeffs: Sequence) -> Ideal:
    """Radical of the power-closure of ``a1 x1 + ... + ad xd``, as the
    intersection of its component primes."""
    components = linear_closure_components(coeffs)
    result = components[0]
    for component in components[1:]:
        result = ideal_intersect(result, component)
    return result


def restrict_to_line(f: MultiPoly, subset: frozenset[int]) -> UniPoly:
    """Substitute x_i = t for i in the subset and 0 elsewhere (1-based)."""
    coeffs: dict[int, object] = {}
    for exps, c in f.terms.items():
        if any(e > 0 for j, e in enumerate(exps) if j + 1 not in subset):
            continue
        k = sum(exps)
        acc = coeffs.get(k, Fraction(0)) + c
        coeffs[k] = acc
    if not coeffs:
        return UniPoly.zero()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return UniPoly(out)


# -- vanishing ideals of root-of-unity points --------------------------------

PointCoordinate = Optional[RootOfUnity]  # None encodes a zero coordinate


def it_generators(point: Sequence[PointCoordinate]) -> Ideal:
    """Generators of the ideal of polynomials vanishing on all power images
    of a point with zero or root-of-unity coordinates.

    Zero coordinates contribute their variables; the rest contribute
    binomials x**u+ - x**u- for an HNF basis of the relation lattice
    {v : sum v_j k_j = 0 mod n} of the exponents.
    """
    d = len(point)
    if d == 0:
        raise ValueError("empty point")
    gens: list[MultiPoly] = []
    live: list[int] = []
    orders: list[tuple[int, int]] = []
    for j, w in enumerate(point):
        if w is None:
            gens.append(MultiPoly.variable(j, d))
        else:
            live.append(j)
            orders.append((w.order, w.index))
    if live:
        n = 1
        for order_, _ in orders:
            n = n * order_ // int_gcd(n, order_)
        ks = [idx * (n // order_) for order_, idx in orders]
        kernel = integer_kernel([ks + [n]])
        relation_rows = [vec[: len(live)] for vec in kernel]
        for row in hermite_normal_form(relation_rows):
            plus = [0] * d
            minus = [0] * d
            for j, v in zip(live, row):
                if v > 0:
                    plus[j] = v
                elif v < 0:
                    minus[j] = -v
            gens.append(
                MultiPoly.monomial(tuple(plus), d)
                - MultiPoly.monomial(tuple(minus), d)
            )
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("point has trivial vanishing ideal")
    return Ideal.of(gens)


def point_power_vanishes(gen: MultiPoly, point: Sequence[PointCoordinate]) -> bool:
    """Evaluate a monomial/binomial generator on every power image of the
    point using only exponent arithmetic mod the root orders."""
    orders = [w.order if w is not None else None for w in point]
    n = 1
    for o in orders:
        if o is not None:
            n = n * o // int_gcd(n, o)
    ks = [
        (w.index * (n // w.order)) if w is not None else None
        for w in point
    ]
    for j in range(1, n + 1):
        values = []
        for exps, coeff in sorted(gen.terms.items()):
            angle = 0
            zero = False
            for e, k in zip(exps, ks):
                if e == 0:
                    continue
                if k is None:
                    zero = True
                    break
                angle = (angle + e * k * j) % n
            values.append((zero, angle, coeff))
        if len(values) == 1:
            zero, _, _ = values[0]
            if not zero:
                return False
        else:
            (z1, a1, c1), (z2, a2, c2) = values
            if z1 != z2:
                return False
            if not z1 and not (a1 == a2 and c1 + c2 == 0):
                return False
    return True
