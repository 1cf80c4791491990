"""Request/response models for the HTTP service (and the CLI thin client)."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

RingName = Literal["poly", "laurent"]
OrderName = Literal["lex", "deglex"]


class UniPolyRequest(BaseModel):
    expr: str = Field(description="univariate polynomial over Q, e.g. '3/2*x^4 - x + 1'")


class PoweredResponse(BaseModel):
    powered: bool
    factorization: str
    text: str


class ClosureGeneratorResponse(BaseModel):
    generator: str
    factorization: str
    text: str


class InteriorGeneratorResponse(BaseModel):
    zero_ideal: bool
    generator: Optional[str] = None
    factorization: Optional[str] = None
    text: str


class PsiFactor(BaseModel):
    antichain: list[int]
    exponent: int


class PsiResponse(BaseModel):
    factors: list[PsiFactor]
    valuation: int
    unit: str
    lcm_form: str
    rational_form: str
    text: str


class FactorizationResponse(BaseModel):
    unit: str
    x_valuation: int
    exponents: dict[int, int]
    residual: str
    text: str


class IdealRequest(BaseModel):
    generators: list[str]
    vars: Optional[list[str]] = None
    ring: RingName = "poly"
    order: OrderName = "deglex"


class BasisResponse(BaseModel):
    vars: list[str]
    basis: list[str]
    text: str


class ClosureResponse(BaseModel):
    vars: list[str]
    generators: list[str]
    basis: list[str]
    text: str


class BoolResponse(BaseModel):
    result: bool
    text: str


class MemberRequest(IdealRequest):
    element: str


class IntersectRequest(BaseModel):
    left: list[str]
    right: list[str]
    vars: Optional[list[str]] = None
    ring: RingName = "poly"
    order: OrderName = "deglex"


class InteriorTestRequest(IdealRequest):
    element: str
    bound: int = 10


class ClassifyRequest(BaseModel):
    expr: str = Field(description="factored form: unit * prod((x/y - zeta(n,k))^m, ...)")
    vars: Optional[list[str]] = None
    ring: RingName = "laurent"


class ClassifyGroup(BaseModel):
    fraction: str
    exponents: dict[int, int]
    powered: bool
    note: str


class ClassifyResponse(BaseModel):
    power_closed: bool
    witness: Optional[str]
    groups: list[ClassifyGroup]
    text: str


class LinesRequest(BaseModel):
    coeffs: list[str]


class LinesResponse(BaseModel):
    subsets: list[list[int]]
    text: str


class RadicalLinearResponse(BaseModel):
    vars: list[str]
    components: list[list[str]]
    generators: list[str]
    basis: list[str]
    text: str


class TorusRequest(BaseModel):
    binomial: str
    vars: Optional[list[str]] = None


class TorusResponse(BaseModel):
    vars: list[str]
    lattice_basis: list[list[int]]
    text: str


class TorusIsoRequest(BaseModel):
    nvars: int
    lattice_basis: list[list[int]]


class TorusIsoResponse(BaseModel):
    torus_rank: int
    invariants: list[int]
    text: str


class PointIdealRequest(BaseModel):
    point: str = Field(description="comma list of 0, 1, -1 or zeta(n,k)")


class PointIdealResponse(BaseModel):
    vars: list[str]
    generators: list[str]
    text: str


class CertificatesRequest(BaseModel):
    only: Optional[str] = None
    stretch_budget_seconds: float = 1800.0


class CertificateEntry(BaseModel):
    id: str
    group: str
    description: str
    passed: bool
    timed_out: bool
    seconds: float
    detail: str


class CertificatesResponse(BaseModel):
    results: list[CertificateEntry]
    all_passed: bool
    text: str


class HealthResponse(BaseModel):
    status: str
    version: str
