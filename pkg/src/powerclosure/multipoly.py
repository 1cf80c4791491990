"""Sparse multivariate and Laurent polynomials with term orders.

Terms map exponent tuples to nonzero field coefficients.  Polynomial mode
requires nonnegative exponents; Laurent mode allows any sign.  Term orders
(lex, deglex, and elimination blocks built on them) are total, multiplicative
monomial orders; deglex with x1 < x2 < ... is the library default.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional

from .field import Scalar

Exponents = tuple[int, ...]


def mono_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Exponents, b: Exponents) -> Optional[Exponents]:
    """a / b when the quotient has nonnegative exponents, else None."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class TermOrder:
    """Monomial order: ``kind`` in {"lex", "deglex"} with optional settings.

    ``priority`` lists variable indices from most to least significant; the
    default (reversed index order) realizes x1 < x2 < ... < xd.  A positive
    ``elim_tail`` makes the last that many variables an elimination block that
    dominates the remaining ones (both blocks compared by ``kind``).
    """

    kind: str = "deglex"
    priority: Optional[tuple[int, ...]] = None
    elim_tail: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "deglex"):
            raise ValueError(f"unknown term order kind {self.kind!r}")
        if self.elim_tail < 0:
            raise ValueError("elim_tail must be nonnegative")

    def _block_key(self, exps: tuple[int, ...], indices: range):
        if self.priority is not None:
            pos = {v: j for j, v in enumerate(indices)}
            seq = tuple(exps[pos[i]] for i in self.priority if i in pos)
        else:
            seq = exps[::-1]
        if self.kind == "deglex":
            return (sum(exps), seq)
        return seq

    def key(self, exps: Exponents):
        """Sort key; larger key means larger monomial."""
        if self.elim_tail:
            split = len(exps) - self.elim_tail
            return (
                self._block_key(exps[split:], range(split, len(exps))),
                self._block_key(exps[:split], range(split)),
            )
        return self._block_key(exps, range(len(exps)))

    def signature(self):
        return (self.kind, self.priority, self.elim_tail)


DEGLEX = TermOrder("deglex")
LEX = TermOrder("lex")


def order_by_name(name: str, elim_tail: int = 0) -> TermOrder:
    return TermOrder(name, elim_tail=elim_tail)


class MultiPoly:
    """Sparse polynomial: {exponent tuple: coefficient}, all entries nonzero."""

    __slots__ = ("terms", "nvars", "laurent", "_hash")

    def __init__(self, terms: Mapping[Exponents, Scalar] | Iterable, nvars: int, laurent: bool = False):
        data: dict[Exponents, Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, c in items:
            if isinstance(c, int):
                c = Fraction(c)
            if c == 0:
                continue
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} does not have {nvars} entries")
            if not laurent and any(e < 0 for e in exps):
                raise ValueError(f"negative exponent {exps} outside Laurent mode")
            if exps in data:
                c = data[exps] + c
                if c == 0:
                    del data[exps]
                    continue
            data[exps] = c
        object.__setattr__(self, "terms", data)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "laurent", laurent)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly values are immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, laurent: bool = False) -> "MultiPoly":
        return cls({}, nvars, laurent)

    @classmethod
    def constant(cls, c, nvars: int, laurent: bool = False) -> "MultiPoly":
        return cls({(0,) * nvars: c}, nvars, laurent)

    @classmethod
    def variable(cls, i: int, nvars: int, laurent: bool = False) -> "MultiPoly":
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls({exps: 1}, nvars, laurent)

    @classmethod
    def monomial(cls, exps: Exponents, nvars: int, c=1, laurent: bool = False) -> "MultiPoly":
        return cls({tuple(exps): c}, nvars, laurent)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    @property
    def term_count(self) -> int:
        """Number of monomials in the support (lambda in the generator bounds)."""
        return len(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def constant_coefficient(self) -> Scalar:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def leading(self, order: TermOrder = DEGLEX) -> tuple[Exponents, Scalar]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=order.key)
        return exps, self.terms[exps]

    def sorted_terms(self, order: TermOrder = DEGLEX) -> list[tuple[Exponents, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic --------------------------------------------------------

    def _mode(self, other: "MultiPoly") -> bool:
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        return self.laurent or other.laurent

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) or not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.nvars, self.laurent)
        data = dict(self.terms)
        for exps, c in other.terms.items():
            acc = data.get(exps, Fraction(0)) + c
            if acc == 0:
                data.pop(exps, None)
            else:
                data[exps] = acc
        return MultiPoly(data, self.nvars, self._mode(other))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.nvars, self.laurent)

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.nvars, self.laurent)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, int):
                other = Fraction(other)
            if other == 0:
                return MultiPoly.zero(self.nvars, self.laurent)
            return MultiPoly(
                {e: c * other for e, c in self.terms.items()}, self.nvars, self.laurent
            )
        laurent = self._mode(other)
        data: dict[Exponents, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                acc = data.get(e)
                acc = c1 * c2 if acc is None else acc + c1 * c2
                if acc == 0:
                    data.pop(e, None)
                else:
                    data[e] = acc
        return MultiPoly(data, self.nvars, laurent)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = MultiPoly.constant(1, self.nvars, self.laurent)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self, order: TermOrder = DEGLEX) -> "MultiPoly":
        if self.is_zero():
            return self
        _, lc = self.leading(order)
        if lc == 1:
            return self
        return MultiPoly(
            {e: c / lc for e, c in self.terms.items()}, self.nvars, self.laurent
        )

    # -- power substitution -------------------------------------------------

    def power_substitute(self, i: int) -> "MultiPoly":
        """Send every variable x_j to x_j**i (i != 0; i >= 1 outside Laurent)."""
        if i == 0:
            raise ValueError("substitution index 0 is not allowed")
        if i < 0 and not self.laurent:
            raise ValueError("negative substitution index requires Laurent mode")
        if i == 1:
            return self
        return MultiPoly(
            {tuple(e * i for e in exps): c for exps, c in self.terms.items()},
            self.nvars,
            self.laurent,
        )

    # -- structural -----------------------------------------------------------

    def as_laurent(self) -> "MultiPoly":
        if self.laurent:
            return self
        return MultiPoly(self.terms, self.nvars, True)

    def as_polynomial(self) -> "MultiPoly":
        if not self.laurent:
            return self
        return MultiPoly(self.terms, self.nvars, False)

    def extend(self, extra: int) -> "MultiPoly":
        """Append ``extra`` fresh variables with exponent zero."""
        pad = (0,) * extra
        return MultiPoly(
            {e + pad: c for e, c in self.terms.items()}, self.nvars + extra, self.laurent
        )

    def project(self, nvars: int) -> "MultiPoly":
        """Drop trailing variables; they must not occur."""
        data = {}
        for exps, c in self.terms.items():
            if any(exps[nvars:]):
                raise ValueError("projection would lose a variable")
            data[exps[:nvars]] = c
        return MultiPoly(data, nvars, self.laurent)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.constant(other, self.nvars).terms
        return NotImplemented

    def canonical_key(self):
        return tuple(sorted(self.terms.items()))

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.nvars, self.canonical_key()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        from .render import multipoly_str

        return f"MultiPoly({multipoly_str(self)!r}, nvars={self.nvars})"

    def __str__(self):
        from .render import multipoly_str

        return multipoly_str(self)


def elementary_symmetric(nvars: int, k: int) -> MultiPoly:
    """Sum of all squarefree degree-k monomials; zero for k > nvars."""
    if k < 0:
        raise ValueError("index must be nonnegative")
    if k == 0:
        return MultiPoly.constant(1, nvars)
    if k > nvars:
        return MultiPoly.zero(nvars)
    terms = {}
    for picks in combinations(range(nvars), k):
        exps = tuple(1 if j in picks else 0 for j in range(nvars))
        terms[exps] = Fraction(1)
    return MultiPoly(terms, nvars)


def power_sum_reduction_holds(nvars: int, n: int, index: int) -> bool:
    """Check x_index**n == sum_{i<d} (-1)**i x_index**(n-i-1) * sigma_{i+1}(d).

    Valid for 1 <= index <= nvars and n >= nvars + 1; the reduction rewrites a
    high power of one variable through the elementary symmetric polynomials.
    """
    if not 1 <= index <= nvars:
        raise ValueError(f"variable index {index} out of range 1..{nvars}")
    if n < nvars + 1:
        raise ValueError(f"exponent must be at least {nvars + 1}")
    x = MultiPoly.variable(index - 1, nvars)
    lhs = x**n
    rhs = MultiPoly.zero(nvars)
    for i in range(nvars):
        term = x ** (n - i - 1) * elementary_symmetric(nvars, i + 1)
        rhs = rhs + (term if i % 2 == 0 else -term)
    return lhs == rhs


def laurent_normalize(f: MultiPoly, order: TermOrder = DEGLEX) -> tuple[MultiPoly, tuple[Scalar, Exponents]]:
    """Split a nonzero Laurent polynomial into unit * normalized polynomial.

    The normalized part has nonnegative exponents, no variable dividing every
    term, and leading coefficient 1; the returned unit (scalar, monomial)
    satisfies ``f == scalar * x**monomial * normalized``.
    """
    if f.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    exps = list(f.terms)
    shift = tuple(min(e[j] for e in exps) for j in range(f.nvars))
    data = {tuple(x - s for x, s in zip(e, shift)): c for e, c in f.terms.items()}
    poly = MultiPoly(data, f.nvars, False)
    _, lc = poly.leading(order)
    return poly.monic(order), (lc, shift)
