"""Expression grammar for polynomials, scalars, factored products and points.

Variables are ``x, y, z, w`` (ordered that way) or ``x1..x9``; coefficients
are integers, fractions ``p/q`` and quadratic irrationals via ``sqrt(m)``;
``*`` is optional between a coefficient and a monomial.  Negative exponents
parse only in Laurent mode.  Errors carry the offending position.  The
rendered form of any value parses back to an equal value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .field import Scalar, sqrt_of
from .multipoly import MultiPoly
from .principal import ExponentPair, Factor, FactoredPrincipal, RootOfUnity
from .unipoly import UniPoly


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^(),]))"
)

_KEYWORDS = {"sqrt", "zeta", "prod"}
_LETTER_ORDER = {"x": 0, "y": 1, "z": 2, "w": 3}


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "name" | "op" | "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", pos)
        if match.lastgroup == "int":
            tokens.append(Token("int", match.group("int"), match.start("int")))
        elif match.lastgroup == "name":
            tokens.append(Token("name", match.group("name"), match.start("name")))
        else:
            tokens.append(Token("op", match.group("op"), match.start("op")))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def _is_variable_name(name: str) -> bool:
    if name in _KEYWORDS:
        return False
    if name in _LETTER_ORDER:
        return True
    return bool(re.fullmatch(r"x[1-9]", name))


def variable_sort_key(name: str):
    if name in _LETTER_ORDER:
        return (0, _LETTER_ORDER[name])
    return (1, int(name[1:]))


def infer_variables(text: str) -> list[str]:
    """Variable universe of an expression in canonical order."""
    seen = {t.text for t in tokenize(text) if t.kind == "name" and _is_variable_name(t.text)}
    lettered = {n for n in seen if n in _LETTER_ORDER}
    indexed = seen - lettered
    if lettered and indexed:
        raise ParseError("cannot mix x,y,z,w with x1..x9 variable names", 0)
    return sorted(seen, key=variable_sort_key)


class _Parser:
    """Recursive-descent evaluator producing Laurent-mode polynomials."""

    def __init__(self, text: str, names: Sequence[str], laurent: bool, allow_zeta: bool = False):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.names = list(names)
        self.index = {n: i for i, n in enumerate(self.names)}
        self.nvars = len(self.names)
        self.laurent = laurent
        self.allow_zeta = allow_zeta
        self.zetas: list[RootOfUnity] = []  # placeholder values carried along

    # token helpers ------------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.take()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}", tok.pos)
        return tok

    def at_op(self, *ops: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text in ops

    # grammar --------------------------------------------------------------

    def parse_expr(self) -> MultiPoly:
        if self.at_op("-"):
            self.take()
            value = -self.parse_term()
        else:
            value = self.parse_term()
        while self.at_op("+", "-"):
            op = self.take().text
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> MultiPoly:
        value = self.parse_power()
        while True:
            if self.at_op("*"):
                self.take()
                value = value * self.parse_power()
            elif self.at_op("/"):
                slash = self.take()
                value = self._divide(value, self.parse_power(), slash.pos)
            elif self.peek().kind in ("int", "name") or self.at_op("("):
                # implicit multiplication: 2x, 2(x+y), x y
                value = value * self.parse_power()
            else:
                return value

    def _divide(self, lhs: MultiPoly, rhs: MultiPoly, pos: int) -> MultiPoly:
        if rhs.is_zero():
            raise ParseError("division by zero", pos)
        if rhs.is_constant():
            inv = 1 / rhs.constant_coefficient()
            return lhs * inv
        if len(rhs.terms) == 1 and self.laurent:
            ((exps, coeff),) = rhs.terms.items()
            inverse = MultiPoly.monomial(
                tuple(-e for e in exps), self.nvars, 1 / coeff, laurent=True
            )
            return lhs * inverse
        raise ParseError("division only by scalars (or monomials in Laurent mode)", pos)

    def parse_power(self) -> MultiPoly:
        base = self.parse_atom()
        if not self.at_op("^"):
            return base
        caret = self.take()
        exponent = self._parse_exponent()
        if exponent >= 0:
            return base**exponent
        if not self.laurent:
            raise ParseError("negative exponent outside Laurent mode", caret.pos)
        if len(base.terms) != 1:
            raise ParseError("negative power of a non-monomial", caret.pos)
        ((exps, coeff),) = base.terms.items()
        return MultiPoly.monomial(
            tuple(e * exponent for e in exps), self.nvars, coeff ** exponent, laurent=True
        )

    def _parse_exponent(self) -> int:
        negative = False
        if self.at_op("("):
            self.take()
            if self.at_op("-"):
                self.take()
                negative = True
            tok = self.take()
            if tok.kind != "int":
                raise ParseError("expected integer exponent", tok.pos)
            self.expect(")")
            return -int(tok.text) if negative else int(tok.text)
        if self.at_op("-"):
            self.take()
            negative = True
        tok = self.take()
        if tok.kind != "int":
            raise ParseError("expected integer exponent", tok.pos)
        return -int(tok.text) if negative else int(tok.text)

    def parse_atom(self) -> MultiPoly:
        tok = self.take()
        if tok.kind == "int":
            value = Fraction(int(tok.text))
            if self.at_op("/") and self.tokens[self.i + 1].kind == "int":
                self.take()
                den = int(self.take().text)
                if den == 0:
                    raise ParseError("zero denominator", tok.pos)
                value = Fraction(int(tok.text), den)
            return MultiPoly.constant(value, self.nvars, self.laurent)
        if tok.kind == "name":
            if tok.text == "sqrt":
                self.expect("(")
                sign = -1 if self.at_op("-") else 1
                if sign < 0:
                    self.take()
                arg = self.take()
                if arg.kind != "int":
                    raise ParseError("sqrt expects an integer", arg.pos)
                self.expect(")")
                return MultiPoly.constant(
                    sqrt_of(sign * int(arg.text)), self.nvars, self.laurent
                )
            if tok.text == "zeta":
                if not self.allow_zeta:
                    raise ParseError("zeta(...) only allowed in factored input", tok.pos)
                self.expect("(")
                order = self.take()
                self.expect(",")
                index = self.take()
                self.expect(")")
                if order.kind != "int" or index.kind != "int":
                    raise ParseError("zeta expects integers", order.pos)
                root = RootOfUnity.of_power(int(order.text), int(index.text))
                value = root.value()
                if value is None:
                    raise ParseError(
                        f"zeta({order.text},{index.text}) has no quadratic value; "
                        "usable only as a factor root",
                        tok.pos,
                    )
                return MultiPoly.constant(value, self.nvars, self.laurent)
            if _is_variable_name(tok.text):
                idx = self.index.get(tok.text)
                if idx is None:
                    raise ParseError(f"unknown variable {tok.text!r}", tok.pos)
                return MultiPoly.variable(idx, self.nvars, self.laurent)
            raise ParseError(f"unknown name {tok.text!r}", tok.pos)
        if tok.text == "(":
            value = self.parse_expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected token {tok.text!r}", tok.pos)

    def finish(self):
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"trailing input {tok.text!r}", tok.pos)


def parse_polynomial(
    text: str,
    names: Optional[Sequence[str]] = None,
    laurent: bool = False,
) -> tuple[MultiPoly, list[str]]:
    """Parse an expression; returns the polynomial and the variable universe."""
    if names is None:
        names = infer_variables(text)
        if not names:
            names = ["x"]
    parser = _Parser(text, names, laurent=True)
    value = parser.parse_expr()
    parser.finish()
    if not laurent:
        if any(e < 0 for exps in value.terms for e in exps):
            raise ParseError("negative exponent outside Laurent mode", 0)
        value = value.as_polynomial()
    return value, list(names)


def parse_scalar(text: str) -> Scalar:
    poly, _ = parse_polynomial(text, names=[])
    return poly.constant_coefficient() if not poly.is_zero() else Fraction(0)


def parse_unipoly(text: str) -> UniPoly:
    poly, names = parse_polynomial(text)
    if len(names) > 1:
        raise ParseError(f"univariate input uses several variables {names}", 0)
    coeffs: dict[int, Scalar] = {}
    for exps, c in poly.terms.items():
        k = exps[0] if exps else 0
        coeffs[k] = c
    if not coeffs:
        return UniPoly.zero()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return UniPoly(out)


# -- factored principal input -------------------------------------------------


def parse_factored(text: str, names: Optional[Sequence[str]] = None) -> tuple[FactoredPrincipal, list[str]]:
    """Parse ``unit * prod((fraction - root)^m, ...)`` factored form.

    The unit is any product of scalars and monomials before ``prod``; each
    factor subtracts a scalar or ``zeta(n,k)`` from a monomial fraction.
    """
    if names is None:
        names = infer_variables(text)
        if not names:
            names = ["x"]
    names = list(names)
    nvars = len(names)

    prod_at = text.find("prod")
    if prod_at < 0:
        raise ParseError("factored input needs a prod(...) part", 0)
    unit_text = text[:prod_at].strip().rstrip("*").strip()
    unit_scalar: Scalar = Fraction(1)
    unit_monomial = (0,) * nvars
    if unit_text:
        unit_poly, _ = parse_polynomial(unit_text, names, laurent=True)
        if len(unit_poly.terms) != 1:
            raise ParseError("unit must be a scalar multiple of one monomial", 0)
        ((unit_monomial, unit_scalar),) = unit_poly.terms.items()

    rest = text[prod_at + len("prod") :].strip()
    if not rest.startswith("(") or not rest.endswith(")"):
        raise ParseError("prod expects a parenthesized factor list", prod_at)
    body = rest[1:-1]
    factors = []
    for chunk in _split_top_level(body, prod_at + len("prod") + 1):
        factors.append(_parse_one_factor(chunk, names))
    if not factors:
        raise ParseError("prod(...) lists no factors", prod_at)
    return (
        FactoredPrincipal(
            unit_scalar=unit_scalar,
            unit_monomial=unit_monomial,
            factors=tuple(factors),
            nvars=nvars,
        ),
        names,
    )


def _split_top_level(body: str, offset: int) -> list[str]:
    parts = []
    depth = 0
    current = []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses", offset)
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ParseError("unbalanced parentheses", offset)
    tail = "".join(current).strip()
    if tail:
        parts.append(tail)
    return [p.strip() for p in parts if p.strip()]


def _parse_one_factor(chunk: str, names: list[str]) -> Factor:
    multiplicity = 1
    chunk = chunk.strip()
    caret = _top_level_caret(chunk)
    if caret is not None:
        multiplicity = int(chunk[caret + 1 :].strip())
        chunk = chunk[:caret].strip()
    if chunk.startswith("(") and chunk.endswith(")"):
        chunk = chunk[1:-1].strip()
    minus = _top_level_minus(chunk)
    if minus is None:
        raise ParseError(f"factor {chunk!r} is not of the form fraction - root", 0)
    fraction_text = chunk[:minus].strip()
    rho_text = chunk[minus + 1 :].strip()

    fraction, _ = parse_polynomial(fraction_text, names, laurent=True)
    if len(fraction.terms) != 1:
        raise ParseError("factor fraction must be a single monomial fraction", 0)
    ((exps, coeff),) = fraction.terms.items()
    if coeff != 1:
        raise ParseError("factor fraction must be monic", 0)
    num = tuple(e if e > 0 else 0 for e in exps)
    den = tuple(-e if e < 0 else 0 for e in exps)

    zeta_match = re.fullmatch(r"zeta\(\s*(\d+)\s*,\s*(\d+)\s*\)", rho_text)
    rho: object
    if zeta_match:
        rho = RootOfUnity.of_power(int(zeta_match.group(1)), int(zeta_match.group(2)))
    else:
        rho = parse_scalar(rho_text)
    return Factor(ExponentPair(num, den), rho, multiplicity)


def _top_level_caret(chunk: str) -> Optional[int]:
    depth = 0
    for i, ch in enumerate(chunk):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "^" and depth == 0:
            return i
    return None


def _top_level_minus(chunk: str) -> Optional[int]:
    depth = 0
    last = None
    for i, ch in enumerate(chunk):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "-" and depth == 0 and i > 0:
            last = i
    return last


# -- points with root-of-unity coordinates ------------------------------------


def parse_point(text: str) -> list[Optional[RootOfUnity]]:
    """Comma-separated coordinates: 0, 1, -1 or zeta(n,k)."""
    point: list[Optional[RootOfUnity]] = []
    for raw in _split_top_level(text, 0):
        token = raw.strip()
        if token == "0":
            point.append(None)
        elif token == "1":
            point.append(RootOfUnity(1, 0))
        elif token == "-1":
            point.append(RootOfUnity(2, 1))
        else:
            match = re.fullmatch(r"zeta\(\s*(\d+)\s*,\s*(\d+)\s*\)", token)
            if not match:
                raise ParseError(f"bad coordinate {token!r}", 0)
            point.append(RootOfUnity.of_power(int(match.group(1)), int(match.group(2))))
    if not point:
        raise ParseError("empty point", 0)
    return point
