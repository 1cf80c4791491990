import random
from fractions import Fraction

import pytest

from powerclosure.field import QuadExt, root_of_unity_order, sqrt_of


def test_rational_addition():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_conjugate_product():
    # (1/2 + sqrt(2)) * (1/2 - sqrt(2)) = 1/4 - 2
    a = QuadExt(Fraction(1, 2), 1, 2)
    b = QuadExt(Fraction(1, 2), -1, 2)
    assert a * b == Fraction(-7, 4)


def test_inverse_one_plus_sqrt2():
    # solve (1 + sqrt(2)) * (a + b*sqrt(2)) == 1 by hand: a = -1, b = 1
    c = QuadExt(1, 1, 2)
    assert c.inverse() == QuadExt(-1, 1, 2)
    assert c * c.inverse() == 1


def test_b_zero_collapses_to_fraction():
    assert QuadExt(3, 0, 2) == Fraction(3)
    assert isinstance(QuadExt(3, 0, 2), Fraction)
    d = QuadExt(0, 1, 2) * QuadExt(0, 1, 2)
    assert d == Fraction(2)


def test_mixed_radicands_rejected():
    with pytest.raises(ValueError):
        QuadExt(0, 1, 2) + QuadExt(0, 1, 3)


def test_bad_radicand_rejected():
    for m in (0, 1, 4, 12, -4):
        with pytest.raises(ValueError):
            QuadExt(0, 1, m)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QuadExt(1, 1, 2) / 0


def test_sqrt_of_extracts_squares():
    assert sqrt_of(8) == QuadExt(0, 2, 2)
    assert sqrt_of(9) == Fraction(3)
    assert sqrt_of(-12) == QuadExt(0, 2, -3)
    assert sqrt_of(0) == 0


def test_root_of_unity_orders():
    assert root_of_unity_order(Fraction(-1)) == 2
    assert root_of_unity_order(Fraction(1)) == 1
    assert root_of_unity_order(Fraction(2)) is None
    # (-1/2 + 1/2*sqrt(-3))**3 == 1, checked by cubing by hand
    zeta3 = QuadExt(Fraction(-1, 2), Fraction(1, 2), -3)
    assert zeta3**3 == 1
    assert root_of_unity_order(zeta3) == 3
    assert root_of_unity_order(QuadExt(0, 1, -1)) == 4
    assert root_of_unity_order(QuadExt(Fraction(1, 2), Fraction(1, 2), -3)) == 6
    assert root_of_unity_order(QuadExt(1, 1, 2)) is None
    assert root_of_unity_order(QuadExt(0, 1, -5)) is None


def _random_scalar(rng, m):
    a = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
    b = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
    return QuadExt(a, b, m)


def test_field_axioms_random():
    rng = random.Random(20240811)
    for m in (2, 5, -1, -3):
        for _ in range(60):
            x = _random_scalar(rng, m)
            y = _random_scalar(rng, m)
            z = _random_scalar(rng, m)
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x + (-x) == 0
            if x != 0:
                assert x * (1 / x) == 1
            assert x + y == y + x
            assert x * y == y * x


def test_canonical_equality_and_hash():
    a = QuadExt(Fraction(2, 4), Fraction(3, 3), 2)
    b = QuadExt(Fraction(1, 2), 1, 2)
    assert a == b
    assert hash(a) == hash(b)
    assert a != QuadExt(Fraction(1, 2), 1, 5)
