"""Exact scalar arithmetic: rationals and quadratic extensions Q(sqrt(m)).

Every coefficient in the library is either a ``fractions.Fraction`` or a
``QuadExt`` value ``a + b*sqrt(m)`` with rational components and a fixed
squarefree integer ``m``.  Values are immutable, canonical (``b == 0``
collapses to a plain ``Fraction``) and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

Rational = Fraction

Scalar = Union[Fraction, "QuadExt"]

_CHECKED_SQUAREFREE: set[int] = set()


def is_squarefree(m: int) -> bool:
    m = abs(m)
    if m == 0:
        return False
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        d += 1
    return True


def _check_radicand(m: int) -> int:
    if m in _CHECKED_SQUAREFREE:
        return m
    if not isinstance(m, int) or m in (0, 1) or not is_squarefree(m):
        raise ValueError(f"radicand must be a squarefree integer != 0, 1, got {m!r}")
    _CHECKED_SQUAREFREE.add(m)
    return m


class QuadExt:
    """``a + b*sqrt(m)`` with rational a, b and squarefree m not in {0, 1}.

    Constructing with ``b == 0`` returns a plain ``Fraction``, so equal field
    values always have identical representations.  Mixing two different
    radicands in one operation raises ``ValueError``.
    """

    __slots__ = ("a", "b", "m")

    def __new__(cls, a, b, m: int):
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            return a
        _check_radicand(m)
        self = object.__new__(cls)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m", m)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt values are immutable")

    def _parts(self, other) -> Optional[tuple[Fraction, Fraction]]:
        if isinstance(other, QuadExt):
            if other.m != self.m:
                raise ValueError(
                    f"cannot combine sqrt({self.m}) with sqrt({other.m})"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        oa, ob = parts
        return QuadExt(self.a + oa, self.b + ob, self.m)

    __radd__ = __add__

    def __sub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        oa, ob = parts
        return QuadExt(self.a - oa, self.b - ob, self.m)

    def __rsub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        oa, ob = parts
        return QuadExt(oa - self.a, ob - self.b, self.m)

    def __mul__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        oa, ob = parts
        return QuadExt(
            self.a * oa + self.m * self.b * ob,
            self.a * ob + self.b * oa,
            self.m,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return QuadExt(self.a / n, -self.b / n, self.m)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadExt(self.a / other, self.b / other, self.m)
        if isinstance(other, QuadExt):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return Fraction(other) * self.inverse()

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.m)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result: Scalar = Fraction(1)
        base: Scalar = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.m)

    def norm(self) -> Fraction:
        """Field norm a^2 - m*b^2 (rational, zero only for the zero element)."""
        return self.a * self.a - self.m * self.b * self.b

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.m) == (other.a, other.b, other.m)
        if isinstance(other, (int, Fraction)):
            return False  # b != 0 by construction
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.m))

    def __bool__(self):
        return True  # zero collapses to Fraction(0)

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, {self.m})"

    def __str__(self):
        if self.b == 1:
            rad = f"sqrt({self.m})"
        elif self.b == -1:
            rad = f"-sqrt({self.m})"
        else:
            rad = f"{self.b}*sqrt({self.m})"
        if self.a == 0:
            return rad
        sign = "+" if self.b > 0 else "-"
        mag = rad.lstrip("-") if self.b < 0 else rad
        return f"{self.a} {sign} {mag}"


def sqrt_of(m: int) -> Scalar:
    """sqrt(m) as an exact scalar; square parts are extracted first."""
    if m == 0:
        return Fraction(0)
    neg = m < 0
    m = abs(m)
    square = 1
    d = 2
    rest = m
    while d * d <= rest:
        while rest % (d * d) == 0:
            square *= d
            rest //= d * d
        d += 1
    if rest == 1 and not neg:
        return Fraction(square)
    return QuadExt(0, square, -rest if neg else rest)


def root_of_unity_order(c: Scalar) -> Optional[int]:
    """Least n with c**n == 1, or None when c is not a root of unity.

    Over Q and real quadratic fields only +-1 qualify; imaginary quadratic
    fields additionally contain elements of order 3, 4 or 6.
    """
    if isinstance(c, int):
        c = Fraction(c)
    if isinstance(c, Fraction):
        if c == 1:
            return 1
        if c == -1:
            return 2
        return None
    if not isinstance(c, QuadExt):
        raise TypeError(f"not a field element: {c!r}")
    if c.m > 0 or c.norm() != 1:
        return None
    for n in (3, 4, 6):
        if c**n == 1:
            return n
    return None
