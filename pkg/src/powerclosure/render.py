"""Canonical text rendering for scalars and polynomials.

The printed form round-trips through the expression parser, and identical
values always print identically (terms sorted by the default deglex order).
"""

from __future__ import annotations

from typing import Optional, Sequence

from .field import QuadExt, Scalar
from .multipoly import DEGLEX, MultiPoly, TermOrder

SHORT_VARS = ("x", "y", "z", "w")


def default_names(nvars: int) -> list[str]:
    if nvars <= 4:
        return list(SHORT_VARS[:nvars])
    return [f"x{i + 1}" for i in range(nvars)]


def _coeff_prefix(c: Scalar, is_leading: bool) -> tuple[str, str]:
    """(connector, magnitude-text) for a term coefficient."""
    if isinstance(c, QuadExt):
        text = f"({c})"
        return ("+ " if not is_leading else "", text)
    sign = "- " if c < 0 else ("+ " if not is_leading else "")
    if is_leading and c < 0:
        sign = "-"
    return sign, str(abs(c))


def _monomial_str(exps: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 0:
            continue
        if e == 1:
            parts.append(name)
        else:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def multipoly_str(
    f: MultiPoly,
    names: Optional[Sequence[str]] = None,
    order: TermOrder = DEGLEX,
) -> str:
    if f.is_zero():
        return "0"
    names = list(names) if names is not None else default_names(f.nvars)
    chunks: list[str] = []
    for position, (exps, c) in enumerate(f.sorted_terms(order)):
        mono = _monomial_str(exps, names)
        connector, mag = _coeff_prefix(c, position == 0)
        if not mono:
            chunks.append(f"{connector}{mag}")
        elif mag == "1" and not isinstance(c, QuadExt):
            chunks.append(f"{connector}{mono}")
        else:
            chunks.append(f"{connector}{mag}*{mono}")
    return " ".join(chunks)


def unipoly_str(f, name: str = "x") -> str:
    from .unipoly import UniPoly

    assert isinstance(f, UniPoly)
    if f.is_zero():
        return "0"
    chunks = []
    first = True
    for k in range(f.degree(), -1, -1):
        c = f.coefficient(k)
        if c == 0:
            continue
        mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
        connector, mag = _coeff_prefix(c, first)
        if not mono:
            chunks.append(f"{connector}{mag}")
        elif mag == "1" and not isinstance(c, QuadExt):
            chunks.append(f"{connector}{mono}")
        else:
            chunks.append(f"{connector}{mag}*{mono}")
        first = False
    return " ".join(chunks)


def factorization_str(fc, name: str = "x") -> str:
    """``unit * x^v * phi_1^a * ... * [residual]`` for a cyclotomic split."""
    parts = []
    if fc.unit != 1:
        parts.append(f"({fc.unit})" if isinstance(fc.unit, QuadExt) else str(fc.unit))
    if fc.x_valuation:
        parts.append(name if fc.x_valuation == 1 else f"{name}^{fc.x_valuation}")
    for n, k in sorted(fc.exponents.items()):
        parts.append(f"phi_{n}" if k == 1 else f"phi_{n}^{k}")
    if fc.residual.degree() > 0:
        parts.append(f"[{unipoly_str(fc.residual, name)}]")
    if not parts:
        parts.append("1")
    return " * ".join(parts)
