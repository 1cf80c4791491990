"""FastAPI service exposing every library operation.

The CLI talks to this app (in process by default, over the network with
--server); tests exercise the endpoints directly.  All computation is exact,
so responses are deterministic given the request.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__, powerpoly
from .cyclotomic import factor_cyclotomic
from .ideal import (
    Ideal,
    bounded_power_interior,
    groebner_basis,
    intersect,
    is_power_closed,
    laurent_saturate,
    member,
    power_closure,
    radical_member,
)
from .multipoly import TermOrder
from .parser import (
    ParseError,
    parse_factored,
    parse_point,
    parse_polynomial,
    parse_scalar,
    parse_unipoly,
)
from .powerpoly import psi_decompose
from .principal import classify_principal
from .render import default_names, factorization_str, multipoly_str, unipoly_str
from .schemas import (
    BasisResponse,
    BoolResponse,
    CertificateEntry,
    CertificatesRequest,
    CertificatesResponse,
    ClassifyGroup,
    ClassifyRequest,
    ClassifyResponse,
    ClosureGeneratorResponse,
    ClosureResponse,
    FactorizationResponse,
    HealthResponse,
    IdealRequest,
    InteriorGeneratorResponse,
    InteriorTestRequest,
    IntersectRequest,
    LinesRequest,
    LinesResponse,
    MemberRequest,
    PointIdealRequest,
    PointIdealResponse,
    PoweredResponse,
    PsiFactor,
    PsiResponse,
    RadicalLinearResponse,
    TorusIsoRequest,
    TorusIsoResponse,
    TorusRequest,
    TorusResponse,
    UniPolyRequest,
)
from .variety import (
    TorusSubgroup,
    it_generators,
    linear_closure_components,
    radical_of_linear_closure,
    subgroup_iso_type,
    torus_subgroup,
    zero_sum_lines,
)

app = FastAPI(
    title="powerclosure",
    version=__version__,
    description="Exact power-closure and power-interior computation for "
    "polynomial and Laurent ideals",
)


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


def _parse_uni(expr: str):
    try:
        f = parse_unipoly(expr)
    except ParseError as exc:
        raise _bad_request(exc)
    if f.is_zero():
        raise _bad_request(ValueError("the zero polynomial is not accepted here"))
    return f


def _parse_ideal(generators, var_names, ring, extra_exprs=()):
    from .parser import infer_variables, variable_sort_key

    if not generators:
        raise _bad_request(ValueError("at least one generator required"))
    laurent = ring == "laurent"
    names = list(var_names) if var_names else None
    if names is None:
        seen: set[str] = set()
        try:
            for g in list(generators) + list(extra_exprs):
                seen.update(infer_variables(g))
        except ParseError as exc:
            raise _bad_request(exc)
        names = sorted(seen, key=variable_sort_key) or ["x"]
    polys = []
    try:
        for text in generators:
            poly, _ = parse_polynomial(text, names, laurent=laurent)
            if poly.is_zero():
                raise ParseError(f"generator {text!r} is zero", 0)
            polys.append(poly)
    except ParseError as exc:
        raise _bad_request(exc)
    return Ideal(tuple(polys), len(names), laurent), names


def _order(name: str) -> TermOrder:
    return TermOrder(name)


# -- univariate --------------------------------------------------------------


@app.post("/uni/is-powered", response_model=PoweredResponse)
def uni_is_powered(req: UniPolyRequest) -> PoweredResponse:
    f = _parse_uni(req.expr)
    try:
        fc = factor_cyclotomic(f)
        powered = powerpoly.is_powered(f)
    except ValueError as exc:
        raise _bad_request(exc)
    text = f"{'powered' if powered else 'not powered'}: {factorization_str(fc)}"
    return PoweredResponse(powered=powered, factorization=factorization_str(fc), text=text)


@app.post("/uni/star", response_model=ClosureGeneratorResponse)
def uni_star(req: UniPolyRequest) -> ClosureGeneratorResponse:
    f = _parse_uni(req.expr)
    try:
        g = powerpoly.power_closure(f)
    except ValueError as exc:
        raise _bad_request(exc)
    fact = factorization_str(factor_cyclotomic(g))
    return ClosureGeneratorResponse(
        generator=unipoly_str(g), factorization=fact,
        text=f"({unipoly_str(g)})  =  {fact}",
    )


@app.post("/uni/circle", response_model=InteriorGeneratorResponse)
def uni_circle(req: UniPolyRequest) -> InteriorGeneratorResponse:
    f = _parse_uni(req.expr)
    try:
        g = powerpoly.power_interior(f)
    except ValueError as exc:
        raise _bad_request(exc)
    if g.is_zero():
        return InteriorGeneratorResponse(zero_ideal=True, text="(0)")
    fact = factorization_str(factor_cyclotomic(g))
    return InteriorGeneratorResponse(
        zero_ideal=False, generator=unipoly_str(g), factorization=fact,
        text=f"({unipoly_str(g)})  =  {fact}",
    )


@app.post("/uni/psi", response_model=PsiResponse)
def uni_psi(req: UniPolyRequest) -> PsiResponse:
    f = _parse_uni(req.expr)
    try:
        dec = psi_decompose(f)
    except ValueError as exc:
        raise _bad_request(exc)
    factors = [
        PsiFactor(antichain=sorted(a.elements), exponent=e) for a, e in dec.factors
    ]
    lcm_chunks = []
    rational_chunks = []
    for a, e in dec.factors:
        elems = ", ".join(_binomial_text(n) for n in sorted(a.elements))
        power = f"^{e}" if e != 1 else ""
        lcm_chunks.append(f"lcm({elems}){power}")
        rational_chunks.append(_rational_psi_text(sorted(a.elements), e))
    lcm_form = " * ".join(lcm_chunks) if lcm_chunks else "1"
    rational_form = " * ".join(rational_chunks) if rational_chunks else "1"
    prefix = ""
    if dec.unit != 1:
        prefix += f"{dec.unit} * "
    if dec.valuation:
        prefix += f"x^{dec.valuation} * "
    return PsiResponse(
        factors=factors,
        valuation=dec.valuation,
        unit=str(dec.unit),
        lcm_form=prefix + lcm_form,
        rational_form=prefix + rational_form,
        text=prefix + lcm_form + "  =  " + prefix + rational_form,
    )


def _binomial_text(n: int) -> str:
    return "x - 1" if n == 1 else f"x^{n} - 1"


def _rational_psi_text(elements: list[int], exponent: int) -> str:
    from itertools import combinations
    from math import gcd as int_gcd

    numerator, denominator = [], []
    for size in range(1, len(elements) + 1):
        for subset in combinations(elements, size):
            g = 0
            for a in subset:
                g = int_gcd(g, a)
            (numerator if size % 2 else denominator).append(f"({_binomial_text(g)})")
    top = "".join(numerator)
    power = f"^{exponent}" if exponent != 1 else ""
    if denominator:
        return f"({top} / {''.join(denominator)}){power}"
    return f"({top}){power}" if len(numerator) > 1 else f"{top}{power}"


@app.post("/uni/factor", response_model=FactorizationResponse)
def uni_factor(req: UniPolyRequest) -> FactorizationResponse:
    f = _parse_uni(req.expr)
    try:
        fc = factor_cyclotomic(f)
    except ValueError as exc:
        raise _bad_request(exc)
    return FactorizationResponse(
        unit=str(fc.unit),
        x_valuation=fc.x_valuation,
        exponents=dict(sorted(fc.exponents.items())),
        residual=unipoly_str(fc.residual),
        text=factorization_str(fc),
    )


# -- ideals --------------------------------------------------------------------


@app.post("/ideal/groebner", response_model=BasisResponse)
def ideal_groebner(req: IdealRequest) -> BasisResponse:
    ideal, names = _parse_ideal(req.generators, req.vars, req.ring)
    order = _order(req.order)
    if ideal.laurent:
        basis = groebner_basis(laurent_saturate(ideal), order)
    else:
        basis = groebner_basis(ideal, order)
    rendered = [multipoly_str(g, names, order) for g in basis]
    return BasisResponse(
        vars=names, basis=rendered, text="{" + ", ".join(rendered) + "}"
    )


@app.post("/ideal/closure", response_model=ClosureResponse)
def ideal_closure(req: IdealRequest) -> ClosureResponse:
    ideal, names = _parse_ideal(req.generators, req.vars, req.ring)
    order = _order(req.order)
    closure = power_closure(ideal)
    if closure.laurent:
        basis = groebner_basis(laurent_saturate(closure), order)
    else:
        basis = groebner_basis(closure, order)
    gens = [multipoly_str(g, names, order) for g in closure.generators]
    rendered = [multipoly_str(g, names, order) for g in basis]
    return ClosureResponse(
        vars=names,
        generators=gens,
        basis=rendered,
        text="generators: (" + ", ".join(gens) + "); basis: {" + ", ".join(rendered) + "}",
    )


@app.post("/ideal/is-closed", response_model=BoolResponse)
def ideal_is_closed(req: IdealRequest) -> BoolResponse:
    ideal, _names = _parse_ideal(req.generators, req.vars, req.ring)
    closed = is_power_closed(ideal)
    return BoolResponse(result=closed, text="power-closed" if closed else "not power-closed")


@app.post("/ideal/member", response_model=BoolResponse)
def ideal_member(req: MemberRequest) -> BoolResponse:
    ideal, names = _parse_ideal(req.generators, req.vars, req.ring, [req.element])
    try:
        f, _ = parse_polynomial(req.element, names, laurent=ideal.laurent)
    except ParseError as exc:
        raise _bad_request(exc)
    inside = member(f, ideal, _order(req.order))
    return BoolResponse(result=inside, text="member" if inside else "not a member")


@app.post("/ideal/intersect", response_model=ClosureResponse)
def ideal_intersect_route(req: IntersectRequest) -> ClosureResponse:
    names = req.vars
    if names is None:
        from .parser import infer_variables, variable_sort_key

        seen = set()
        for text in req.left + req.right:
            seen.update(infer_variables(text))
        names = sorted(seen, key=variable_sort_key) or ["x"]
    left, _ = _parse_ideal(req.left, names, req.ring)
    right, _ = _parse_ideal(req.right, names, req.ring)
    order = _order(req.order)
    meet = intersect(left, right)
    carried = Ideal(meet.generators, meet.nvars, laurent=False)
    basis = groebner_basis(carried, order)
    gens = [multipoly_str(g, names, order) for g in meet.generators]
    rendered = [multipoly_str(g, names, order) for g in basis]
    return ClosureResponse(
        vars=names, generators=gens, basis=rendered,
        text="{" + ", ".join(rendered) + "}",
    )


@app.post("/ideal/radical-member", response_model=BoolResponse)
def ideal_radical_member(req: MemberRequest) -> BoolResponse:
    ideal, names = _parse_ideal(req.generators, req.vars, req.ring, [req.element])
    if ideal.laurent:
        raise _bad_request(ValueError("radical membership is polynomial-mode only"))
    try:
        f, _ = parse_polynomial(req.element, names)
    except ParseError as exc:
        raise _bad_request(exc)
    inside = radical_member(f, ideal)
    return BoolResponse(
        result=inside, text="in the radical" if inside else "not in the radical"
    )


@app.post("/ideal/interior-test", response_model=BoolResponse)
def ideal_interior_test(req: InteriorTestRequest) -> BoolResponse:
    if req.bound < 1:
        raise _bad_request(ValueError("bound must be at least 1"))
    ideal, names = _parse_ideal(req.generators, req.vars, req.ring, [req.element])
    try:
        f, _ = parse_polynomial(req.element, names, laurent=ideal.laurent)
    except ParseError as exc:
        raise _bad_request(exc)
    ok = bounded_power_interior(ideal, f, req.bound)
    return BoolResponse(
        result=ok,
        text=(
            f"all substitutions up to {req.bound} stay in the ideal"
            if ok
            else "some substitution leaves the ideal"
        ),
    )


# -- principal classifier --------------------------------------------------------


@app.post("/principal/classify", response_model=ClassifyResponse)
def principal_classify(req: ClassifyRequest) -> ClassifyResponse:
    try:
        factored, _names = parse_factored(req.expr, req.vars)
        result = classify_principal(factored, ring=req.ring)
    except (ParseError, ValueError) as exc:
        raise _bad_request(exc)
    groups = [
        ClassifyGroup(
            fraction=str(g.xi),
            exponents=dict(g.exponents),
            powered=g.powered,
            note=g.note,
        )
        for g in result.groups
    ]
    text = "power-closed" if result.power_closed else f"not power-closed: {result.witness}"
    return ClassifyResponse(
        power_closed=result.power_closed,
        witness=result.witness,
        groups=groups,
        text=text,
    )


# -- variety -----------------------------------------------------------------------


@app.post("/variety/lines", response_model=LinesResponse)
def variety_lines(req: LinesRequest) -> LinesResponse:
    try:
        coeffs = [parse_scalar(c) for c in req.coeffs]
        family = zero_sum_lines(coeffs)
    except (ParseError, ValueError) as exc:
        raise _bad_request(exc)
    subsets = [sorted(s) for s in family.subsets]
    text = (
        "zero locus is the origin only"
        if not subsets
        else "lines through subsets: " + ", ".join("{" + ",".join(map(str, s)) + "}" for s in subsets)
    )
    return LinesResponse(subsets=subsets, text=text)


@app.post("/variety/radical-linear", response_model=RadicalLinearResponse)
def variety_radical_linear(req: LinesRequest) -> RadicalLinearResponse:
    try:
        coeffs = [parse_scalar(c) for c in req.coeffs]
        components = linear_closure_components(coeffs)
        rad = radical_of_linear_closure(coeffs)
    except (ParseError, ValueError) as exc:
        raise _bad_request(exc)
    names = default_names(len(coeffs))
    basis = groebner_basis(rad)
    rendered = [multipoly_str(g, names) for g in basis]
    return RadicalLinearResponse(
        vars=names,
        components=[[multipoly_str(g, names) for g in c.generators] for c in components],
        generators=[multipoly_str(g, names) for g in rad.generators],
        basis=rendered,
        text="{" + ", ".join(rendered) + "}",
    )


@app.post("/variety/torus", response_model=TorusResponse)
def variety_torus(req: TorusRequest) -> TorusResponse:
    try:
        poly, names = parse_polynomial(req.binomial, req.vars, laurent=True)
        group = torus_subgroup(poly)
    except (ParseError, ValueError) as exc:
        raise _bad_request(exc)
    return TorusResponse(
        vars=names,
        lattice_basis=[list(r) for r in group.basis],
        text="lattice rows: " + "; ".join(str(list(r)) for r in group.basis),
    )


@app.post("/variety/torus-iso", response_model=TorusIsoResponse)
def variety_torus_iso(req: TorusIsoRequest) -> TorusIsoResponse:
    if req.nvars < 1:
        raise _bad_request(ValueError("need at least one variable"))
    try:
        group = TorusSubgroup.of(req.nvars, req.lattice_basis)
        rank, invariants = subgroup_iso_type(group)
    except ValueError as exc:
        raise _bad_request(exc)
    cyclic = " x ".join(f"Z/{d}" for d in invariants) or "trivial"
    return TorusIsoResponse(
        torus_rank=rank,
        invariants=list(invariants),
        text=f"torus rank {rank}, cyclic part {cyclic}",
    )


@app.post("/variety/it-gens", response_model=PointIdealResponse)
def variety_point_ideal(req: PointIdealRequest) -> PointIdealResponse:
    try:
        point = parse_point(req.point)
        ideal = it_generators(point)
    except (ParseError, ValueError) as exc:
        raise _bad_request(exc)
    names = default_names(ideal.nvars)
    rendered = [multipoly_str(g, names) for g in ideal.generators]
    return PointIdealResponse(
        vars=names, generators=rendered, text="(" + ", ".join(rendered) + ")"
    )


# -- certificates -------------------------------------------------------------------


@app.post("/certificates/run", response_model=CertificatesResponse)
def certificates_run(req: CertificatesRequest) -> CertificatesResponse:
    from .certificates import run_certificates

    results = run_certificates(req.only, req.stretch_budget_seconds)
    entries = [
        CertificateEntry(
            id=r.cert_id,
            group=r.group,
            description=r.description,
            passed=r.passed,
            timed_out=r.timed_out,
            seconds=round(r.seconds, 3),
            detail=r.detail,
        )
        for r in results
    ]
    lines = [
        f"{'PASS' if e.passed else ('TIMEOUT' if e.timed_out else 'FAIL'):7s} "
        f"[{e.group}] {e.id} ({e.seconds:.2f}s): {e.detail}"
        for e in entries
    ]
    all_passed = all(e.passed or e.timed_out for e in entries)
    return CertificatesResponse(
        results=entries, all_passed=all_passed, text="\n".join(lines)
    )


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)
