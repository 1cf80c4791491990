from fractions import Fraction

from powerclosure.cyclotomic import factor_cyclotomic
from powerclosure.field import QuadExt
from powerclosure.multipoly import MultiPoly
from powerclosure.parser import parse_unipoly
from powerclosure.render import factorization_str, multipoly_str, unipoly_str


def test_factorization_str_forms():
    fc = factor_cyclotomic(parse_unipoly("x^3*(x-2)*(x+1)"))
    assert factorization_str(fc) == "x^3 * phi_2 * [x - 2]"
    fc = factor_cyclotomic(parse_unipoly("(x^2-1)^2*(x-1)"))
    assert factorization_str(fc) == "phi_1^3 * phi_2^2"
    fc = factor_cyclotomic(parse_unipoly("-2*x + 2"))
    assert factorization_str(fc) == "-2 * phi_1"
    fc = factor_cyclotomic(parse_unipoly("1"))
    assert factorization_str(fc) == "1"


def test_unipoly_str_spells_out_terms():
    assert unipoly_str(parse_unipoly("3/2*x^4 - x + 1")) == "3/2*x^4 - x + 1"
    assert unipoly_str(parse_unipoly("0")) == "0"
    assert unipoly_str(parse_unipoly("-x")) == "-x"


def test_multipoly_str_quadratic_coefficients():
    alpha = QuadExt(Fraction(1, 2), 1, 2)
    x, y = (MultiPoly.variable(i, 2) for i in range(2))
    f = y - alpha * x
    assert multipoly_str(f, ["x", "y"]) == "y + (-1/2 - sqrt(2))*x"


def test_multipoly_str_laurent_exponents():
    f = MultiPoly({(-1, 1): Fraction(1), (0, 0): Fraction(-1)}, 2, laurent=True)
    assert multipoly_str(f, ["x", "y"]) == "x^-1*y - 1"
