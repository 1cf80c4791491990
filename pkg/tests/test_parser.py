import random
from fractions import Fraction

import pytest

from powerclosure.field import QuadExt
from powerclosure.multipoly import MultiPoly
from powerclosure.parser import (
    ParseError,
    infer_variables,
    parse_factored,
    parse_point,
    parse_polynomial,
    parse_scalar,
    parse_unipoly,
)
from powerclosure.principal import ExponentPair, RootOfUnity
from powerclosure.render import multipoly_str, unipoly_str
from powerclosure.unipoly import UniPoly


def test_parse_simple_polynomial():
    poly, names = parse_polynomial("y - 2*x")
    assert names == ["x", "y"]
    x, y = (MultiPoly.variable(i, 2) for i in range(2))
    assert poly == y - 2 * x


def test_parse_with_sqrt_coefficients():
    poly, names = parse_polynomial("z - (1/2 + sqrt(2))*x - (1/2 - sqrt(2))*y")
    assert names == ["x", "y", "z"]
    alpha = QuadExt(Fraction(1, 2), 1, 2)
    beta = QuadExt(Fraction(1, 2), -1, 2)
    x, y, z = (MultiPoly.variable(i, 3) for i in range(3))
    assert poly == z - alpha * x - beta * y
    # the two coefficients sum to 1
    assert alpha + beta == 1


def test_parse_optional_star_and_powers():
    poly, _ = parse_polynomial("3/2x^4 - x + 1")
    assert poly == parse_polynomial("3/2*x^4 - x + 1")[0]


def test_parse_negative_exponent_modes():
    poly, names = parse_polynomial("x^-1*y - 1", laurent=True)
    assert poly.terms == {(-1, 1): Fraction(1), (0, 0): Fraction(-1)}
    with pytest.raises(ParseError):
        parse_polynomial("x^-1*y - 1")


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x + $")
    assert "position" in str(info.value)
    with pytest.raises(ParseError):
        parse_polynomial("x + q", names=["x"])
    with pytest.raises(ParseError):
        parse_polynomial("x +")


def test_variable_ordering():
    assert infer_variables("w + z*y - x") == ["x", "y", "z", "w"]
    assert infer_variables("x3 - x1") == ["x1", "x3"]
    with pytest.raises(ParseError):
        infer_variables("x1 + y")


def test_parse_scalar():
    assert parse_scalar("5/6") == Fraction(5, 6)
    assert parse_scalar("1/2 + sqrt(2)") == QuadExt(Fraction(1, 2), 1, 2)
    assert parse_scalar("-3") == -3
    assert parse_scalar("sqrt(8)") == QuadExt(0, 2, 2)


def test_parse_unipoly():
    assert parse_unipoly("x^3 - 1") == UniPoly([-1, 0, 0, 1])
    assert parse_unipoly("3/2*x^4 - x + 1") == UniPoly(
        [1, -1, 0, 0, Fraction(3, 2)]
    )
    with pytest.raises(ParseError):
        parse_unipoly("x + y")


def test_render_round_trip_examples():
    for text in ("y - 2*x", "x^2 + x*y + y^2", "1", "0", "x^3*y - x*y^3"):
        poly, names = parse_polynomial(text)
        printed = multipoly_str(poly, names)
        again, _ = parse_polynomial(printed, names)
        assert again == poly


def test_render_round_trip_random():
    rng = random.Random(2024)
    for _ in range(600):
        nvars = rng.randint(1, 3)
        names = ["x", "y", "z"][:nvars]
        laurent = rng.random() < 0.4
        lo = -3 if laurent else 0
        terms = {}
        for _ in range(rng.randint(1, 5)):
            exps = tuple(rng.randint(lo, 4) for _ in range(nvars))
            coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            if rng.random() < 0.25:
                coeff = QuadExt(coeff, Fraction(rng.randint(-3, 3)), 2)
            if coeff != 0:
                terms[exps] = coeff
        poly = MultiPoly(terms, nvars, laurent)
        printed = multipoly_str(poly, names)
        again, _ = parse_polynomial(printed, names, laurent=laurent)
        assert again == poly, printed


def test_unipoly_round_trip_random():
    rng = random.Random(2025)
    for _ in range(400):
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(0, 7))]
        f = UniPoly(coeffs)
        assert parse_unipoly(unipoly_str(f)) == f


def test_render_is_stable():
    poly, names = parse_polynomial("y - 2*x + x^2")
    assert multipoly_str(poly, names) == multipoly_str(poly, names)


def test_parse_factored():
    fp, names = parse_factored("prod((x/y - zeta(2,1))^2, (x/y - 1))")
    assert names == ["x", "y"]
    assert fp.unit_scalar == 1
    assert len(fp.factors) == 2
    assert fp.factors[0].xi == ExponentPair((1, 0), (0, 1))
    assert fp.factors[0].rho == RootOfUnity(2, 1)
    assert fp.factors[0].multiplicity == 2
    assert fp.factors[1].rho == Fraction(1)  # scalar literals stay scalars


def test_parse_factored_with_unit_and_scalars():
    fp, names = parse_factored("3*x^2 * prod((x*y^-1 - 2))")
    assert fp.unit_scalar == 3
    assert fp.unit_monomial == (2, 0)
    assert fp.factors[0].rho == Fraction(2)


def test_parse_factored_rejects_malformed():
    with pytest.raises(ParseError):
        parse_factored("x - y")  # no prod
    with pytest.raises(ParseError):
        parse_factored("prod()")
    with pytest.raises(ParseError):
        parse_factored("prod((x + y - 1))")


def test_parse_point():
    point = parse_point("zeta(4,1),zeta(4,3)")
    assert point == [RootOfUnity(4, 1), RootOfUnity(4, 3)]
    assert parse_point("0,1,-1") == [None, RootOfUnity(1, 0), RootOfUnity(2, 1)]
    with pytest.raises(ParseError):
        parse_point("2")
