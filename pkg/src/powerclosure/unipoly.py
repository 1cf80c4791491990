"""Dense univariate polynomials over an exact field.

Coefficients are ``Fraction`` or ``QuadExt`` values indexed by degree with
trailing zeros trimmed, so equal polynomials compare equal structurally.
Besides ring arithmetic the module provides the substitution operator
``f(x) -> f(x**i)``, exact divisibility tests and monic gcd/lcm.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable

from .field import Scalar


def _coerce(c) -> Scalar:
    return Fraction(c) if isinstance(c, int) else c


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly values are immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls((0,) * k + (c,))

    # -- basic queries ------------------------------------------------

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def valuation(self) -> int:
        """Multiplicity of the root 0 (0 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return 0

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    # -- ring arithmetic ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) or not isinstance(other, UniPoly):
            other = UniPoly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            (self.coefficient(k) + other.coefficient(k) for k in range(n))
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly((-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly((c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return UniPoly()
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divrem(self, g: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Quotient and remainder with ``self == q*g + r`` and deg r < deg g."""
        if g.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dg = g.degree()
        lc = g.leading_coefficient()
        if len(r) <= dg:
            return UniPoly(), self
        q = [Fraction(0)] * (len(r) - dg)
        for k in range(len(r) - dg - 1, -1, -1):
            c = r[k + dg]
            if c == 0:
                continue
            factor = c / lc
            q[k] = factor
            for j, gc in enumerate(g.coeffs):
                r[k + j] -= factor * gc
        return UniPoly(q), UniPoly(r[:dg])

    def __mod__(self, g):
        return self.divrem(g)[1]

    def __floordiv__(self, g):
        return self.divrem(g)[0]

    def exact_div(self, g: "UniPoly") -> "UniPoly":
        q, r = self.divrem(g)
        if not r.is_zero():
            raise ValueError("exact division with nonzero remainder")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return UniPoly((c / lc for c in self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly((k * c for k, c in enumerate(self.coeffs) if k))

    def __call__(self, value):
        acc: Scalar = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- substitution -------------------------------------------------

    def power_substitute(self, i: int) -> "UniPoly":
        """f(x) -> f(x**i); substitution indices start at 1."""
        if i < 1:
            raise ValueError(f"substitution index must be >= 1, got {i}")
        if i == 1 or self.is_zero():
            return self
        out = [Fraction(0)] * (self.degree() * i + 1)
        for k, c in enumerate(self.coeffs):
            if c != 0:
                out[k * i] = c
        return UniPoly(out)

    def times_x_power(self, k: int) -> "UniPoly":
        if self.is_zero():
            return self
        if k < 0:
            raise ValueError("negative shift")
        return UniPoly((Fraction(0),) * k + self.coeffs)

    # -- structural ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        from .render import unipoly_str

        return unipoly_str(self)


def divides(f: UniPoly, g: UniPoly) -> bool:
    """True when f divides g exactly; f must be nonzero."""
    if f.is_zero():
        raise ValueError("divisibility by the zero polynomial is undefined")
    if g.is_zero():
        return True
    if g.degree() < f.degree():
        return False
    return g.divrem(f)[1].is_zero()


def _integer_primitive(f: UniPoly) -> list[int]:
    """Scale a nonzero rational polynomial to primitive integer coefficients."""
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    content = 0
    for v in ints:
        content = int_gcd(content, v)
    return [v // content for v in ints]


def _int_primitive_part(cs: list[int]) -> list[int]:
    content = 0
    for v in cs:
        content = int_gcd(content, v)
    if content in (0, 1):
        return cs
    return [v // content for v in cs]


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of primitive integer coefficient lists (deg a >= deg b)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for j, bc in enumerate(b):
            r[shift + j] -= lr * bc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        r = _int_primitive_part(r)
    return r


def gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor; gcd(f, 0) = monic(f)."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_rational() and g.is_rational():
        a = _integer_primitive(f)
        b = _integer_primitive(g)
        if len(a) < len(b):
            a, b = b, a
        while any(b):
            a, b = b, _int_pseudo_rem(a, b)
        return UniPoly((Fraction(c) for c in a)).monic()
    a, b = f.monic(), g.monic()
    if a.degree() < b.degree():
        a, b = b, a
    while not b.is_zero():
        a, b = b, a.divrem(b)[1]
        if not b.is_zero():
            b = b.monic()
    return a.monic()


def lcm(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic least common multiple; lcm(f, 0) = 0."""
    if f.is_zero() or g.is_zero():
        return UniPoly()
    return (f * g).exact_div(gcd(f, g)).monic()
