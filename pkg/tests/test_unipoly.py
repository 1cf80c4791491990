import random
from fractions import Fraction

import pytest

from powerclosure.unipoly import UniPoly, divides, gcd, lcm

X = UniPoly.x()


def poly(*coeffs):
    """UniPoly from coefficients listed by ascending degree."""
    return UniPoly(coeffs)


def test_product():
    assert (X - 1) * (X + 1) == poly(-1, 0, 1)


def test_divrem_exact():
    q, r = poly(-1, 0, 0, 1).divrem(X - 1)  # x^3 - 1 by x - 1
    assert q == poly(1, 1, 1)
    assert r.is_zero()


def test_divrem_with_remainder():
    # long division by hand: x^3 = x*(x^2 + 1) - x
    q, r = poly(0, 0, 0, 1).divrem(poly(1, 0, 1))
    assert q == X
    assert r == -X


def test_divrem_reconstruction_random():
    rng = random.Random(7)
    for _ in range(100):
        f = UniPoly([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(0, 8))])
        g = UniPoly([Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(1, 5))])
        if g.is_zero():
            continue
        q, r = f.divrem(g)
        assert q * g + r == f
        assert r.degree() < g.degree()


def test_division_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        X.divrem(UniPoly.zero())


def test_power_substitute():
    assert poly(1, 0, 1).power_substitute(3) == poly(1, 0, 0, 0, 0, 0, 1)
    assert (X - 1).power_substitute(2) == poly(-1, 0, 1)
    f = poly(-1, 0, 1) * poly(1, 1, 1)  # (x^2-1)(x^2+x+1)
    expected = poly(-1, 0, 0, 0, 1) * poly(1, 0, 1, 0, 1)  # substitute, then expand
    assert f.power_substitute(2) == expected
    with pytest.raises(ValueError):
        X.power_substitute(0)


def test_substitution_is_ring_homomorphism():
    rng = random.Random(11)
    for _ in range(50):
        f = UniPoly([rng.randint(-4, 4) for _ in range(rng.randint(1, 6))])
        g = UniPoly([rng.randint(-4, 4) for _ in range(rng.randint(1, 6))])
        i = rng.randint(1, 5)
        assert (f * g).power_substitute(i) == f.power_substitute(i) * g.power_substitute(i)
        assert (f + g).power_substitute(i) == f.power_substitute(i) + g.power_substitute(i)


def test_gcd_examples():
    assert gcd(poly(-1, 0, 1), poly(-1, 0, 0, 1)) == X - 1
    assert gcd(poly(-2, 0, 1), poly(-1, 0, 1)) == UniPoly.one()
    assert gcd(UniPoly.zero(), 3 * (X - 1)) == X - 1
    with pytest.raises(ValueError):
        gcd(UniPoly.zero(), UniPoly.zero())


def test_lcm_pair_of_binomials():
    # (x^2-1)(x^3-1)/(x-1), division done independently
    product = poly(-1, 0, 1) * poly(-1, 0, 0, 1)
    expected = product.exact_div(X - 1).monic()
    assert lcm(poly(-1, 0, 1), poly(-1, 0, 0, 1)) == expected
    assert expected == poly(-1, -1, 0, 1, 1)
    assert lcm(X - 1, UniPoly.zero()).is_zero()


def test_divides():
    assert divides(X - 1, poly(-1, 0, 0, 0, 0, 1))
    assert not divides(poly(-1, 0, 1), poly(-1, 0, 0, 1))
    with pytest.raises(ValueError):
        divides(UniPoly.zero(), X)


def test_divides_powered_example():
    # product of the first three cyclotomic polynomials divides its
    # substitution by 5
    f = (X - 1) * (X + 1) * poly(1, 1, 1)
    assert divides(f, f.power_substitute(5))


def test_gcd_lcm_substitution_exchange():
    rng = random.Random(13)
    for _ in range(40):
        f = UniPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 5))])
        g = UniPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 5))])
        if f.is_zero() or g.is_zero():
            continue
        for i in (2, 3, 5, 8):
            assert gcd(f, g).power_substitute(i) == gcd(
                f.power_substitute(i), g.power_substitute(i)
            )
            assert lcm(f, g).power_substitute(i).monic() == lcm(
                f.power_substitute(i), g.power_substitute(i)
            )


def test_monic_and_evaluate():
    f = 3 * (X - 1) * (X - 2)
    assert f.monic() == (X - 1) * (X - 2)
    assert f(2) == 0
    assert f(0) == 6


def test_derivative():
    f = poly(1, -1, 0, Fraction(3, 2))  # 3/2 x^3 - x + 1
    assert f.derivative() == poly(-1, 0, Fraction(9, 2))
    assert UniPoly.one().derivative().is_zero()
    product = (X - 1) * (X + 2)
    assert product.derivative() == (X - 1) + (X + 2)
