import random
from fractions import Fraction

import pytest

from powerclosure.cyclotomic import cyclotomic_poly
from powerclosure.powerpoly import (
    Antichain,
    downset_bound,
    is_powered,
    power_closure,
    power_interior,
    psi_decompose,
    psi_inclusion_exclusion,
    psi_polynomial,
)
from powerclosure.unipoly import UniPoly, divides, gcd, lcm

X = UniPoly.x()


def phi_product(exponents: dict[int, int]) -> UniPoly:
    f = UniPoly.one()
    for n, k in sorted(exponents.items()):
        f = f * cyclotomic_poly(n) ** k
    return f


# the recurring example pair: f is powered, g fails at index 8 over 4
F_POWERED = {12: 2, 8: 2, 6: 2, 4: 3, 3: 2, 2: 3, 1: 4}
G_NOT_POWERED = {12: 2, 8: 3, 6: 2, 4: 2, 3: 2, 2: 3, 1: 4}
# the closure/interior workhorse with uneven multiplicities
F_TALL = {12: 6, 8: 3, 6: 5, 4: 4, 3: 2, 2: 3, 1: 4}


def test_is_powered_examples():
    assert is_powered(phi_product(F_POWERED))
    assert not is_powered(phi_product(G_NOT_POWERED))
    assert not is_powered(X - 2)  # nonconstant residual
    assert is_powered(UniPoly.monomial(3))  # monomials are powered
    with pytest.raises(ValueError):
        is_powered(UniPoly.zero())


def test_powered_necessary_condition():
    f = phi_product(F_POWERED)
    for i in range(1, 31):
        assert divides(f, f.power_substitute(i))


def test_closure_exponent_formula():
    assert power_closure(phi_product(F_TALL)) == phi_product(
        {12: 2, 8: 3, 6: 2, 4: 3, 3: 2, 2: 3, 1: 4}
    )


def test_closure_edge_cases():
    assert power_closure(X - 2) == UniPoly.one()  # gcd(x-2, x^2-2) = 1
    assert power_closure(UniPoly.monomial(3)) == UniPoly.monomial(3)
    assert power_closure(UniPoly([Fraction(5)])) == UniPoly.one()


def test_interior_exponent_formula():
    assert power_interior(phi_product(F_TALL)) == phi_product(
        {12: 6, 8: 3, 6: 6, 4: 6, 3: 6, 2: 6, 1: 6}
    )


def test_interior_edge_cases():
    assert power_interior(X - 2).is_zero()  # non-root-of-unity root
    # q_1 = q_2 = 1 for x + 1, giving (x-1)(x+1)
    assert power_interior(X + 1) == UniPoly([-1, 0, 1])
    assert power_interior(UniPoly.monomial(2)) == UniPoly.monomial(2)


def test_is_powered_iff_closure_fixed_point():
    rng = random.Random(55)
    for _ in range(40):
        exps = {n: rng.randint(1, 4) for n in rng.sample(range(1, 13), rng.randint(1, 4))}
        f = phi_product(exps) * rng.choice([1, 2, -3])
        assert is_powered(f) == (power_closure(f) == f.monic())


def test_interior_minimality():
    rng = random.Random(56)
    for _ in range(25):
        exps = {n: rng.randint(1, 4) for n in rng.sample(range(1, 13), rng.randint(1, 3))}
        f = phi_product(exps)
        interior = power_interior(f)
        assert divides(f, interior)
        assert is_powered(interior)
        # dropping any single cyclotomic factor breaks poweredness or the
        # divisibility by f, so the interior is minimal
        from powerclosure.cyclotomic import factor_cyclotomic

        for n in factor_cyclotomic(interior).exponents:
            smaller = interior.exact_div(cyclotomic_poly(n))
            assert not is_powered(smaller) or not divides(f, smaller)


def test_lattice_closure_of_powered_polys():
    rng = random.Random(57)
    for _ in range(25):
        f = power_interior(phi_product({rng.randint(1, 10): rng.randint(1, 3)}))
        g = power_interior(phi_product({rng.randint(1, 10): rng.randint(1, 3)}))
        assert is_powered(lcm(f, g))
        assert is_powered(gcd(f, g))


def test_gcd_closure_exchange():
    rng = random.Random(58)
    for _ in range(25):
        exps_f = {n: rng.randint(1, 3) for n in rng.sample(range(1, 11), rng.randint(1, 3))}
        exps_g = {n: rng.randint(1, 3) for n in rng.sample(range(1, 11), rng.randint(1, 3))}
        f, g = phi_product(exps_f), phi_product(exps_g)
        assert power_closure(gcd(f, g)) == gcd(power_closure(f), power_closure(g))


def test_closure_strictness_witness():
    f = phi_product({4: 2, 2: 1, 1: 2})
    g = phi_product({2: 2, 1: 1})
    joined = lcm(f, g)
    assert power_closure(joined) == joined  # lcm is powered
    strictly_smaller = lcm(power_closure(f), power_closure(g))
    assert strictly_smaller == phi_product({4: 1, 2: 1, 1: 2})
    assert joined != strictly_smaller


def test_interior_strictness_witness():
    f = phi_product({4: 2, 2: 1, 1: 2})
    g = phi_product({2: 2, 1: 1})
    met = gcd(f, g)
    assert power_interior(met) == met  # gcd is powered
    strictly_larger = gcd(power_interior(f), power_interior(g))
    assert strictly_larger == phi_product({2: 2, 1: 2})
    assert met != strictly_larger


def test_compositions():
    rng = random.Random(59)
    for _ in range(20):
        exps = {n: rng.randint(1, 3) for n in rng.sample(range(1, 11), rng.randint(1, 3))}
        f = phi_product(exps) * rng.choice([UniPoly.one(), X - 2])
        closure = power_closure(f)
        assert power_closure(closure) == closure
        interior = power_interior(f)
        if interior.is_zero():
            continue
        assert power_interior(interior) == interior
        assert power_closure(interior) == interior
        assert power_interior(closure) == closure


def test_antichain_validation():
    with pytest.raises(ValueError):
        Antichain(frozenset({2, 4}))
    assert Antichain.from_set({2, 4, 3}).elements == frozenset({4, 3})
    assert Antichain(frozenset({12, 8})).downset() == frozenset({1, 2, 3, 4, 6, 12, 8})


def test_psi_polynomial_examples():
    assert psi_polynomial({1}) == X - 1
    # (x^2-1)(x^3-1)/(x-1)
    expected = ((UniPoly.monomial(2) - 1) * (UniPoly.monomial(3) - 1)).exact_div(X - 1)
    assert psi_polynomial({2, 3}) == expected
    # (x^12-1)(x^8-1)/(x^4-1)
    expected = ((UniPoly.monomial(12) - 1) * (UniPoly.monomial(8) - 1)).exact_div(
        UniPoly.monomial(4) - 1
    )
    assert psi_polynomial({12, 8}) == expected


def test_psi_equals_inclusion_exclusion():
    rng = random.Random(60)
    for _ in range(30):
        elems = set(rng.sample(range(1, 31), rng.randint(1, 3)))
        assert psi_polynomial(elems) == psi_inclusion_exclusion(elems)


def test_psi_downset_product():
    for elems in ({2, 3}, {12, 8}, {4, 6, 9}):
        product = UniPoly.one()
        for d in Antichain.from_set(elems).downset():
            product = product * cyclotomic_poly(d)
        assert psi_polynomial(elems) == product


def test_psi_decompose_examples():
    dec = psi_decompose(phi_product(F_POWERED))
    chains = [(sorted(a.elements), e) for a, e in dec.factors]
    assert chains == [([8, 12], 2), ([4], 1), ([1], 1)]
    assert dec.reconstruct() == phi_product(F_POWERED)

    dec = psi_decompose(X - 1)
    assert [(sorted(a.elements), e) for a, e in dec.factors] == [([1], 1)]

    f = UniPoly([-1, 0, 1]) ** 2 * (X - 1)  # (x^2-1)^2 (x-1): k1=3, k2=2
    dec = psi_decompose(f)
    assert [(sorted(a.elements), e) for a, e in dec.factors] == [([2], 2), ([1], 1)]
    assert dec.reconstruct() == f


def test_psi_decompose_nested_and_unique():
    rng = random.Random(61)
    for _ in range(20):
        exps = {n: rng.randint(1, 4) for n in rng.sample(range(1, 13), rng.randint(1, 4))}
        f = power_interior(phi_product(exps))
        dec = psi_decompose(f)
        downsets = [a.downset() for a, _ in dec.factors]
        for bigger, smaller in zip(downsets, downsets[1:]):
            assert smaller < bigger  # strictly decreasing chain
        assert dec.reconstruct() == f


def test_psi_decompose_rejects_unpowered():
    with pytest.raises(ValueError):
        psi_decompose(phi_product(G_NOT_POWERED))


def test_downset_bound():
    f = phi_product({1: 1, 2: 1, 4: 1, 3: 1})
    assert downset_bound(f, "star") == frozenset({1, 2, 3, 4})
    assert downset_bound(cyclotomic_poly(8), "circle") == frozenset({1, 2, 4, 8})
    assert downset_bound(X - 2, "star") == frozenset()
    with pytest.raises(ValueError):
        downset_bound(f, "interior")


def test_closure_equals_substitution_gcd_small():
    # independent route: gcd of f(x^i) for i = 1..deg+1
    rng = random.Random(62)
    for _ in range(12):
        exps = {n: rng.randint(1, 3) for n in rng.sample(range(1, 9), rng.randint(1, 3))}
        f = phi_product(exps)
        if rng.random() < 0.4:
            f = f * (X - 2)
        oracle = f.monic()
        for i in range(2, f.degree() + 2):
            oracle = gcd(oracle, f.power_substitute(i))
        assert power_closure(f) == oracle
