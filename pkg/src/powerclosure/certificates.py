"""Machine-checked certificate suite reproducing the worked examples.

Every certificate re-runs one acceptance check end to end: the fixed worked
examples exactly, the randomized sweeps from fixed seeds, and the budgeted
stretch computation.  Results carry group tags (sec2..sec7 by topic area) so
subsets can be selected from the CLI.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Callable, Optional

from . import cyclotomic, powerpoly
from .cyclotomic import cyclotomic_poly
from .field import QuadExt
from .ideal import (
    ComputationBudgetExceeded,
    Ideal,
    add,
    equal,
    groebner_basis,
    intersect,
    is_power_closed,
    member,
    power_closure,
    product,
    radical_member,
    triangular_closure_generators,
)
from .multipoly import MultiPoly, laurent_normalize, power_sum_reduction_holds
from .powerpoly import (
    is_powered,
    psi_decompose,
    psi_inclusion_exclusion,
    psi_polynomial,
)
from .principal import (
    ExponentPair,
    Factor,
    FactoredPrincipal,
    RootOfUnity,
    binomial_factor,
    classify_principal,
    expand_factored,
)
from .unipoly import UniPoly, gcd as poly_gcd, lcm as poly_lcm
from .variety import (
    TorusSubgroup,
    it_generators,
    linear_closure_components,
    radical_of_linear_closure,
    restrict_to_line,
    subgroup_iso_type,
    zero_sum_lines,
)


@dataclass
class CertificateResult:
    cert_id: str
    group: str
    description: str
    passed: bool
    detail: str
    seconds: float
    timed_out: bool = False


@dataclass
class Certificate:
    cert_id: str
    group: str
    description: str
    budget_seconds: float
    runner: Callable[[], str]

    def run(self) -> CertificateResult:
        start = time.monotonic()
        try:
            detail = self.runner()
            elapsed = time.monotonic() - start
        except ComputationBudgetExceeded:
            elapsed = time.monotonic() - start
            return CertificateResult(
                self.cert_id,
                self.group,
                self.description,
                passed=False,
                detail=f"did not finish within the {self.budget_seconds:.0f}s budget "
                "(reported, not counted as a failure)",
                seconds=elapsed,
                timed_out=True,
            )
        except AssertionError as exc:
            elapsed = time.monotonic() - start
            return CertificateResult(
                self.cert_id, self.group, self.description,
                passed=False, detail=f"check failed: {exc}", seconds=elapsed,
            )
        if elapsed > self.budget_seconds:
            return CertificateResult(
                self.cert_id, self.group, self.description,
                passed=False,
                detail=f"{detail}; but took {elapsed:.1f}s > {self.budget_seconds:.0f}s budget",
                seconds=elapsed,
            )
        return CertificateResult(
            self.cert_id, self.group, self.description,
            passed=True, detail=detail, seconds=elapsed,
        )


def _phi_product(exponents: dict[int, int]) -> UniPoly:
    f = UniPoly.one()
    for n, k in sorted(exponents.items()):
        f = f * cyclotomic_poly(n) ** k
    return f


def _vars(n: int, laurent: bool = False):
    return [MultiPoly.variable(i, n, laurent) for i in range(n)]


# -- sec3: closure of linear forms -------------------------------------------


def _run_linear_closure_basis() -> str:
    x, y = _vars(2)
    closure = power_closure(Ideal.of([y - 2 * x]))
    basis = groebner_basis(closure)
    assert basis == (y - 2 * x, x * x), f"basis {basis}"
    return "closure((y - 2x)) has reduced deglex basis {y - 2x, x^2}"


def _run_intersection_strictness() -> str:
    x, y = _vars(2)
    I = power_closure(Ideal.of([y - 2 * x]))
    J = power_closure(Ideal.of([y - 3 * x]))
    both = intersect(I, J)
    assert groebner_basis(both) == (x * x, x * y, y * y)
    assert member(x * x, both)
    meet_first = power_closure(intersect(Ideal.of([y - 2 * x]), Ideal.of([y - 3 * x])))
    assert not member(x * x, meet_first)
    return (
        "x^2 lies in closure(I) cap closure(J) = (x,y)^2 but not in "
        "closure(I cap J): intersection does not commute with closure"
    )


def _run_power_sum_and_triangular() -> str:
    for d in range(1, 6):
        for ell in range(1, d + 1):
            for n in range(d + 1, d + 5):
                assert power_sum_reduction_holds(d, n, ell), (d, n, ell)
    rng = random.Random(20110)
    for trial in range(20):
        d = rng.randint(2, 4)
        coeffs = [Fraction(rng.choice([c for c in range(-3, 4) if c])) for _ in range(d)]
        f = MultiPoly.zero(d)
        for i, a in enumerate(coeffs):
            f = f + a * MultiPoly.variable(i, d)
        closure = power_closure(Ideal.of([f]))
        alt = Ideal.of(triangular_closure_generators(coeffs))
        assert equal(closure, alt), (trial, coeffs)
    return (
        "power-sum reduction identity holds for 1 <= l <= d <= 5, d+1 <= n <= d+4; "
        "20 random linear forms: triangular generators match the closure"
    )


# -- sec5: univariate machinery ------------------------------------------------

_F_POWERED = {12: 2, 8: 2, 6: 2, 4: 3, 3: 2, 2: 3, 1: 4}
_G_UNPOWERED = {12: 2, 8: 3, 6: 2, 4: 2, 3: 2, 2: 3, 1: 4}
_F_TALL = {12: 6, 8: 3, 6: 5, 4: 4, 3: 2, 2: 3, 1: 4}


def _run_star_circle_exponents() -> str:
    assert is_powered(_phi_product(_F_POWERED))
    assert not is_powered(_phi_product(_G_UNPOWERED))
    tall = _phi_product(_F_TALL)
    assert powerpoly.power_closure(tall) == _phi_product(
        {12: 2, 8: 3, 6: 2, 4: 3, 3: 2, 2: 3, 1: 4}
    )
    assert powerpoly.power_interior(tall) == _phi_product(
        {12: 6, 8: 3, 6: 6, 4: 6, 3: 6, 2: 6, 1: 6}
    )
    f = _phi_product({4: 2, 2: 1, 1: 2})
    g = _phi_product({2: 2, 1: 1})
    joined = poly_lcm(f, g)
    assert powerpoly.power_closure(joined) == joined
    assert poly_lcm(powerpoly.power_closure(f), powerpoly.power_closure(g)) != joined
    met = poly_gcd(f, g)
    assert powerpoly.power_interior(met) == met
    assert poly_gcd(powerpoly.power_interior(f), powerpoly.power_interior(g)) != met
    return (
        "closure and interior exponent formulas reproduce the worked multiplicities; "
        "lcm/gcd strictness witnesses confirmed"
    )


def _int_rem_monic(sparse: dict[int, int], g: list[int]) -> list[int]:
    """Remainder of a sparse integer polynomial by a monic integer one."""
    m = len(g) - 1
    if m == 0:
        return []
    top = max(sparse) if sparse else -1
    if top < m:
        out = [0] * m
        for e, c in sparse.items():
            out[e] = c
        return out
    work = [0] * (top + 1)
    for e, c in sparse.items():
        work[e] = c
    for k in range(top, m - 1, -1):
        c = work[k]
        if c:
            base = k - m
            for j in range(m):
                work[base + j] -= c * g[j]
            work[k] = 0
    return work[:m]


def _int_trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _int_gcd_poly(a: list[int], b: list[int]) -> list[int]:
    """Primitive-PRS gcd of integer coefficient lists, sign-normalized."""
    from .unipoly import _int_primitive_part, _int_pseudo_rem

    a, b = _int_trim(list(a)), _int_trim(list(b))
    if not b:
        a, b = b, a
    if not b:
        raise ValueError("gcd(0, 0)")
    if a and len(a) < len(b):
        a, b = b, a
    if not a:
        a, b = b, []
    while b:
        a, b = b, _int_trim(_int_pseudo_rem(a, b))
    a = _int_primitive_part(a)
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def _substitution_gcd_oracle(f: list[int]) -> UniPoly:
    """Monic gcd of f(x**i) for i = 1..deg(f)+1 over the integers.

    Independent of the exponent-minimum formula: plain remainders and
    primitive-sequence gcds only.  Requires f monic with integer entries.
    """
    deg = len(f) - 1
    sparse = {e: c for e, c in enumerate(f) if c}
    g = list(f)
    for i in range(2, deg + 2):
        g_trimmed = _int_trim(list(g))
        valuation = next(j for j, c in enumerate(g_trimmed) if c)
        if valuation == len(g_trimmed) - 1:
            break  # a pure monomial cannot shrink further
        spread = {e * i: c for e, c in sparse.items()}
        if g_trimmed[-1] != 1:
            raise AssertionError("oracle modulus lost monicity")
        r = _int_trim(_int_rem_monic(spread, g_trimmed))
        if not r:
            continue
        g = _int_gcd_poly(g_trimmed, r)
    return UniPoly([Fraction(c) for c in g]).monic()


def _random_cyclotomic_product(rng: random.Random) -> UniPoly:
    while True:
        exps = {
            n: rng.randint(1, 4)
            for n in rng.sample(range(1, 25), rng.randint(1, 3))
        }
        degree = sum(cyclotomic.euler_phi(n) * k for n, k in exps.items())
        if degree <= 70:
            break
    f = _phi_product(exps)
    if rng.random() < 0.35:
        residual = rng.choice(
            [UniPoly([-2, 1]), UniPoly([2, 1, 1]), UniPoly([2, 0, 0, 1])]
        )
        f = f * residual
    if rng.random() < 0.2:
        f = f.times_x_power(rng.randint(1, 2))
    return f


def _run_star_gcd_oracle() -> str:
    rng = random.Random(51824)
    for trial in range(200):
        f = _random_cyclotomic_product(rng)
        ints = [int(c) for c in f.coeffs]
        assert all(Fraction(c) == orig for c, orig in zip(ints, f.coeffs))
        oracle = _substitution_gcd_oracle(ints)
        assert powerpoly.power_closure(f) == oracle, f"trial {trial}"
    return "closure generator equals the substitution-gcd oracle on 200 random products"


def _run_psi_machinery() -> str:
    dec = psi_decompose(_phi_product(_F_POWERED))
    chains = [(sorted(a.elements), e) for a, e in dec.factors]
    assert chains == [([8, 12], 2), ([4], 1), ([1], 1)], chains
    assert dec.reconstruct() == _phi_product(_F_POWERED)

    rng = random.Random(51301)
    for _ in range(50):
        elems = set(rng.sample(range(1, 31), rng.randint(1, 3)))
        assert psi_polynomial(elems) == psi_inclusion_exclusion(elems)

    n1, n2, n3 = 4, 6, 9
    g12, g13, g23 = int_gcd(n1, n2), int_gcd(n1, n3), int_gcd(n2, n3)
    g123 = int_gcd(g12, n3)
    products = [
        psi_polynomial({n1, n2}) * psi_polynomial({n3}) * psi_polynomial({g12}),
        psi_polynomial({n1, n3}) * psi_polynomial({n2}) * psi_polynomial({g13}),
        psi_polynomial({n2, n3}) * psi_polynomial({n1}) * psi_polynomial({g23}),
        psi_polynomial({n1, n2, n3})
        * psi_polynomial({g12, g13, g23})
        * psi_polynomial({g123}),
    ]
    assert all(p == products[0] for p in products[1:])
    return (
        "nested decomposition [({12,8},2),({4},1),({1},1)] reproduced; "
        "inclusion-exclusion form matches on 50 random antichains; the four "
        "(4,6,9) psi products coincide"
    )


# -- sec4: Laurent ring --------------------------------------------------------


def _laurent_plane(alpha) -> MultiPoly:
    x, y, z = _vars(3)
    return z - alpha * x - (1 - alpha) * y


def _run_laurent_linear_closure() -> str:
    alpha = QuadExt(Fraction(1, 2), 1, 2)
    f = _laurent_plane(alpha)
    closure = power_closure(Ideal.of([f], laurent=True))
    x, y, _z = _vars(3)
    expected = Ideal.of([f, (y - x) * (y - x)], laurent=True)
    assert equal(closure, expected)
    return (
        "Laurent closure of (z - a x - (1-a) y), a = 1/2 + sqrt(2), matches "
        "(generator, (y-x)^2) after saturation by canonical bases"
    )


def _run_laurent_intersection_strictness(deadline: Optional[float]) -> str:
    alpha = QuadExt(Fraction(1, 2), 1, 2)
    gamma = QuadExt(Fraction(1, 2), 2, 2)
    beta, delta = 1 - alpha, 1 - gamma
    x, y = _vars(2)
    one = MultiPoly.constant(1, 2)
    gens = []
    for i in range(1, 7):
        xi, yi = x**i, y**i
        gens.append((one - alpha * xi - beta * yi) * (one - gamma * xi - delta * yi))
    # (y-x)^2 in both single closures (cheap side of the strict containment)
    for a in (alpha, gamma):
        closure = power_closure(Ideal.of([_laurent_plane(a)], laurent=True))
        assert member(((_vars(3)[1] - _vars(3)[0]) ** 2).as_laurent(), closure)
    # monomial-cleared membership certificate for the closure of the product
    target = (x * y) ** 12 * (y - x) ** 2
    assert not member(target, Ideal.of(gens), deadline=deadline)
    return (
        "(y-x)^2 lies in each plane closure, while (xy)^12 (y-x)^2 stays outside "
        "the product closure's dehomogenized polynomial ideal: strict containment"
    )


# -- sec2: closure-operator laws ----------------------------------------------


def _random_small_ideal(rng: random.Random, nvars: int) -> Optional[Ideal]:
    gens = []
    for _ in range(rng.randint(1, 2)):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            exps = tuple(rng.randint(0, 2) for _ in range(nvars))
            if sum(exps) > 3:
                continue
            c = rng.randint(-2, 2)
            if c:
                terms[exps] = Fraction(c)
        f = MultiPoly(terms, nvars)
        if not f.is_zero():
            gens.append(f)
    return Ideal.of(gens) if gens else None


def _run_closure_operator_laws() -> str:
    rng = random.Random(20241)
    trials = 0
    while trials < 100:
        nvars = rng.randint(1, 3)
        I = _random_small_ideal(rng, nvars)
        J = _random_small_ideal(rng, nvars)
        if I is None or J is None:
            continue
        trials += 1
        closure_I = power_closure(I)
        # enlarging and idempotent
        assert all(member(g, closure_I) for g in I.generators)
        assert equal(power_closure(closure_I), closure_I)
        # monotone into the sum, and the sum exchange
        closure_sum = power_closure(add(I, J))
        assert all(member(g, closure_sum) for g in closure_I.generators)
        assert equal(closure_sum, add(closure_I, power_closure(J)))
        # products of power-closed ideals stay power-closed
        closed_product = product(
            Ideal.of(groebner_basis(closure_I)),
            Ideal.of(groebner_basis(power_closure(J))),
        )
        assert is_power_closed(closed_product)
    # compositions are exact in one variable
    rng2 = random.Random(20242)
    for _ in range(40):
        exps = {n: rng2.randint(1, 3) for n in rng2.sample(range(1, 11), rng2.randint(1, 3))}
        f = _phi_product(exps)
        if rng2.random() < 0.3:
            f = f * UniPoly([-2, 1])
        star = powerpoly.power_closure(f)
        circle = powerpoly.power_interior(f)
        assert powerpoly.power_closure(star) == star
        if not circle.is_zero():
            assert powerpoly.power_interior(circle) == circle
            assert powerpoly.power_closure(circle) == circle
            assert powerpoly.power_interior(star) == star
    return (
        "closure laws, sum exchange and product closure hold on 100 random ideals; "
        "closure/interior compositions collapse as required in one variable"
    )


# -- sec6: principal classifier ------------------------------------------------


def _binomial_pool(nvars: int, max_degree: int) -> list[MultiPoly]:
    vectors = []

    def bounded(limit):
        out = [()]
        for _ in range(nvars):
            out = [e + (k,) for e in out for k in range(limit + 1)]
        return [e for e in out if 0 < sum(e) <= limit]

    from .multipoly import DEGLEX

    pool = []
    exps = bounded(max_degree) + [(0,) * nvars]
    for a in exps:
        for b in exps:
            if a == b:
                continue
            if DEGLEX.key(a) <= DEGLEX.key(b):
                continue
            pool.append(
                MultiPoly.monomial(a, nvars) - MultiPoly.monomial(b, nvars)
            )
    return pool


def _combine_factored(parts: list[FactoredPrincipal], nvars: int) -> FactoredPrincipal:
    scalar = Fraction(1)
    monomial = (0,) * nvars
    factors: list[Factor] = []
    for part in parts:
        scalar = scalar * part.unit_scalar
        monomial = tuple(a + b for a, b in zip(monomial, part.unit_monomial))
        factors.extend(part.factors)
    return FactoredPrincipal(scalar, monomial, tuple(factors), nvars)


def _run_classifier_groebner_agreement() -> str:
    checked = 0
    for nvars, max_degree in ((2, 3), (3, 2)):
        pool = _binomial_pool(nvars, max_degree)
        cases = [[b] for b in pool]
        cases += [
            [pool[i], pool[j]]
            for i in range(len(pool))
            for j in range(i, len(pool))
        ]
        for chosen in cases:
            expanded = MultiPoly.constant(1, nvars)
            for b in chosen:
                expanded = expanded * b
            if expanded.total_degree() > 6 or expanded.is_zero():
                continue
            combined = _combine_factored([binomial_factor(b) for b in chosen], nvars)
            verdict = classify_principal(combined, ring="poly")
            normalized, _ = laurent_normalize(expanded.as_laurent())
            assert verdict.power_closed, f"binomial product flagged: {chosen}"
            assert is_power_closed(Ideal.of([normalized])), f"groebner side: {chosen}"
            checked += 1

    rng = random.Random(606)
    fractions_pool = [
        ExponentPair((1, 0), (0, 1)),
        ExponentPair((2, 0), (0, 1)),
        ExponentPair((1, 0), (0, 2)),
        ExponentPair((2, 1), (0, 0)),
        ExponentPair((1, 1), (0, 0)),
    ]
    packages: list[list[tuple]] = [
        [(RootOfUnity(1, 0), 1)],
        [(RootOfUnity(2, 1), 1)],
        [(RootOfUnity(1, 0), 2), (RootOfUnity(2, 1), 1)],
        [(RootOfUnity(4, 1), 1), (RootOfUnity(4, 3), 1)],
        [
            (RootOfUnity(4, 1), 1),
            (RootOfUnity(4, 3), 1),
            (RootOfUnity(2, 1), 1),
            (RootOfUnity(1, 0), 1),
        ],
        [(RootOfUnity(6, 1), 1), (RootOfUnity(6, 5), 1)],
        [(Fraction(2), 1)],
        [(Fraction(-1, 2), 1)],
        [(QuadExt(0, 1, 2), 1)],
        [(RootOfUnity(4, 1), 1)],  # incomplete conjugates
    ]
    randomized = 0
    while randomized < 50:
        xi = rng.choice(fractions_pool)
        package = rng.choice(packages)
        try:
            combined = FactoredPrincipal(
                Fraction(1),
                (0, 0),
                tuple(Factor(xi, rho, m) for rho, m in package),
                2,
            )
            expanded = expand_factored(combined)
        except ValueError:
            continue
        verdict = classify_principal(combined)
        normalized, _ = laurent_normalize(expanded)
        assert verdict.power_closed == is_power_closed(Ideal.of([normalized])), (
            xi,
            package,
        )
        randomized += 1
    return (
        f"classifier and basis membership agree on {checked} binomial products "
        "and 50 randomized factored inputs (root and non-root cases)"
    )


# -- sec7: radical and variety ---------------------------------------------------


def _run_radical_variety() -> str:
    x, y = _vars(2)
    I = Ideal.of([x + y, x * y])
    assert radical_member(x, I) and radical_member(y, I)
    rad = radical_of_linear_closure([Fraction(1), Fraction(1)])
    assert equal(rad, Ideal.of([x, y]))

    rng = random.Random(700)
    trials = 0
    while trials < 50:
        d = rng.randint(2, 4)
        coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(d)]
        if all(c == 0 for c in coeffs):
            continue
        trials += 1
        f = MultiPoly.zero(d)
        for i, a in enumerate(coeffs):
            f = f + a * MultiPoly.variable(i, d)
        closure = power_closure(Ideal.of([f]))
        rad = radical_of_linear_closure(coeffs)
        closure_ideal = Ideal.of(list(closure.generators))
        for r in rad.generators:
            assert radical_member(r, closure_ideal), (coeffs, r)
        for component in linear_closure_components(coeffs):
            for g in closure.generators:
                assert member(g, component), (coeffs, g)
        assert is_power_closed(rad), coeffs
        for subset in zero_sum_lines(coeffs).subsets:
            for g in closure.generators:
                assert restrict_to_line(g, subset).is_zero(), (coeffs, subset)

    assert subgroup_iso_type(TorusSubgroup.of(2, [(2, -2)])) == (1, (2,))
    gens = it_generators([RootOfUnity(2, 1), RootOfUnity(2, 1)])
    laurent = Ideal(gens.generators, 2, laurent=True)
    assert member((x - y).as_laurent(), laurent)
    return (
        "radical of (x+y, xy) is (x,y); 50 random linear forms pass the "
        "two-sided membership validation; torus invariants and point ideals check out"
    )


STRETCH_BUDGET_SECONDS = 1800.0


def build_certificates(stretch_budget: float = STRETCH_BUDGET_SECONDS) -> list[Certificate]:
    return [
        Certificate(
            "linear-closure-basis",
            "sec3",
            "closure of one linear form has the expected two-element basis",
            1.0,
            _run_linear_closure_basis,
        ),
        Certificate(
            "intersection-strictness",
            "sec3",
            "closure and intersection do not commute (membership certificate)",
            5.0,
            _run_intersection_strictness,
        ),
        Certificate(
            "star-circle-exponents",
            "sec5",
            "closure/interior multiplicity formulas and lcm/gcd strictness",
            1.0,
            _run_star_circle_exponents,
        ),
        Certificate(
            "star-gcd-oracle",
            "sec5",
            "closure generator equals the substitution gcd on 200 random products",
            60.0,
            _run_star_gcd_oracle,
        ),
        Certificate(
            "psi-machinery",
            "sec5",
            "nested psi decomposition and inclusion-exclusion identities",
            30.0,
            _run_psi_machinery,
        ),
        Certificate(
            "laurent-linear-closure",
            "sec4",
            "Laurent closure of a skew plane equals its two-generator form",
            30.0,
            _run_laurent_linear_closure,
        ),
        Certificate(
            "laurent-intersection-strictness",
            "sec4",
            "strict containment for the Laurent intersection (budgeted stretch)",
            stretch_budget,
            lambda: _run_laurent_intersection_strictness(
                time.monotonic() + stretch_budget
            ),
        ),
        Certificate(
            "closure-operator-laws",
            "sec2",
            "closure laws, sum exchange, product closure, compositions",
            300.0,
            _run_closure_operator_laws,
        ),
        Certificate(
            "classifier-groebner-agreement",
            "sec6",
            "factored classifier agrees with basis membership",
            600.0,
            _run_classifier_groebner_agreement,
        ),
        Certificate(
            "radical-variety-structure",
            "sec7",
            "radical components, torus invariants and point ideals",
            300.0,
            _run_radical_variety,
        ),
        Certificate(
            "power-sum-triangular-generators",
            "sec3",
            "power-sum reduction identity and triangular generator equality",
            60.0,
            _run_power_sum_and_triangular,
        ),
    ]


def run_certificates(
    only: Optional[str] = None, stretch_budget: float = STRETCH_BUDGET_SECONDS
) -> list[CertificateResult]:
    """Run all certificates, or only those matching a group tag or id substring."""
    results = []
    for cert in build_certificates(stretch_budget):
        if only and only != cert.group and only not in cert.cert_id:
            continue
        results.append(cert.run())
    return results
