"""Command-line client for the powerclosure service.

Every subcommand builds a request model and posts it to the HTTP API; by
default the requests run against an in-process copy of the app, while
``--server URL`` targets a running instance (start one with ``serve``).
The client only formats input and output; all computation happens behind
the service endpoints.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click
import httpx


class ServiceClient:
    def __init__(self, server: Optional[str]):
        if server:
            self._client = httpx.Client(base_url=server, timeout=None)
        else:
            import warnings

            with warnings.catch_warnings():
                # starlette tags its TestClient httpx note with a custom category
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> dict:
        response = self._client.post(path, json=payload)
        if response.status_code >= 400:
            try:
                detail = response.json().get("detail", response.text)
            except Exception:
                detail = response.text
            raise click.ClickException(str(detail))
        return response.json()


pass_state = click.make_pass_decorator(dict)


@click.group()
@click.option("--server", default=None, help="base URL of a running service; defaults to in-process")
@click.option("--json", "as_json", is_flag=True, help="emit raw JSON responses")
@click.pass_context
def main(ctx, server, as_json):
    """Exact power-closure computations for polynomial and Laurent ideals."""
    ctx.obj = {"client": ServiceClient(server), "json": as_json}


def _emit(state: dict, payload: dict, exit_flag: Optional[bool] = None):
    if state["json"]:
        click.echo(json.dumps(payload, sort_keys=True, default=str))
    else:
        click.echo(payload.get("text", json.dumps(payload, sort_keys=True)))
    if exit_flag is not None and not exit_flag:
        sys.exit(1)


def _ring_order_options(fn):
    fn = click.option("--ring", type=click.Choice(["poly", "laurent"]), default="poly")(fn)
    fn = click.option("--order", type=click.Choice(["lex", "deglex"]), default="deglex")(fn)
    fn = click.option("--vars", "var_names", default=None, help="comma list fixing the variable order")(fn)
    return fn


def _vars_list(var_names: Optional[str]) -> Optional[list[str]]:
    if var_names is None:
        return None
    return [v.strip() for v in var_names.split(",") if v.strip()]


# -- univariate commands -----------------------------------------------------


@main.command("is-powered")
@click.argument("expr")
@pass_state
def is_powered_cmd(state, expr):
    """Does EXPR divide all of its power substitutions?"""
    payload = state["client"].post("/uni/is-powered", {"expr": expr})
    _emit(state, payload, payload["powered"])


@main.command("star")
@click.argument("expr")
@pass_state
def star_cmd(state, expr):
    """Monic generator of the power-closure of (EXPR)."""
    _emit(state, state["client"].post("/uni/star", {"expr": expr}))


@main.command("circle")
@click.argument("expr")
@pass_state
def circle_cmd(state, expr):
    """Monic generator of the power-interior of (EXPR), or (0)."""
    _emit(state, state["client"].post("/uni/circle", {"expr": expr}))


@main.command("psi")
@click.argument("expr")
@pass_state
def psi_cmd(state, expr):
    """Nested lcm-of-binomials decomposition of a powered EXPR."""
    _emit(state, state["client"].post("/uni/psi", {"expr": expr}))


@main.command("factor-cyclotomic")
@click.argument("expr")
@pass_state
def factor_cmd(state, expr):
    """Cyclotomic factorization unit * x^v * phi_n^k * [residual]."""
    _emit(state, state["client"].post("/uni/factor", {"expr": expr}))


# -- ideal commands ------------------------------------------------------------


@main.command("groebner")
@click.argument("generators", nargs=-1, required=True)
@_ring_order_options
@pass_state
def groebner_cmd(state, generators, ring, order, var_names):
    """Reduced basis of the ideal (Laurent input is saturated first)."""
    payload = state["client"].post(
        "/ideal/groebner",
        {"generators": list(generators), "ring": ring, "order": order, "vars": _vars_list(var_names)},
    )
    _emit(state, payload)


@main.command("closure")
@click.argument("generators", nargs=-1, required=True)
@_ring_order_options
@pass_state
def closure_cmd(state, generators, ring, order, var_names):
    """Generators and basis of the power-closure."""
    payload = state["client"].post(
        "/ideal/closure",
        {"generators": list(generators), "ring": ring, "order": order, "vars": _vars_list(var_names)},
    )
    _emit(state, payload)


@main.command("is-closed")
@click.argument("generators", nargs=-1, required=True)
@_ring_order_options
@pass_state
def is_closed_cmd(state, generators, ring, order, var_names):
    """Is the ideal power-closed?"""
    payload = state["client"].post(
        "/ideal/is-closed",
        {"generators": list(generators), "ring": ring, "order": order, "vars": _vars_list(var_names)},
    )
    _emit(state, payload, payload["result"])


@main.command("member")
@click.argument("element")
@click.argument("generators", nargs=-1, required=True)
@_ring_order_options
@pass_state
def member_cmd(state, element, generators, ring, order, var_names):
    """Is ELEMENT in the ideal spanned by GENERATORS?"""
    payload = state["client"].post(
        "/ideal/member",
        {
            "element": element,
            "generators": list(generators),
            "ring": ring,
            "order": order,
            "vars": _vars_list(var_names),
        },
    )
    _emit(state, payload, payload["result"])


@main.command("intersect")
@click.option("--left", multiple=True, required=True, help="generator of the left ideal")
@click.option("--right", multiple=True, required=True, help="generator of the right ideal")
@_ring_order_options
@pass_state
def intersect_cmd(state, left, right, ring, order, var_names):
    """Generators of the intersection of two ideals."""
    payload = state["client"].post(
        "/ideal/intersect",
        {
            "left": list(left),
            "right": list(right),
            "ring": ring,
            "order": order,
            "vars": _vars_list(var_names),
        },
    )
    _emit(state, payload)


@main.command("radical-member")
@click.argument("element")
@click.argument("generators", nargs=-1, required=True)
@_ring_order_options
@pass_state
def radical_member_cmd(state, element, generators, ring, order, var_names):
    """Is ELEMENT in the radical of the ideal?"""
    payload = state["client"].post(
        "/ideal/radical-member",
        {
            "element": element,
            "generators": list(generators),
            "ring": ring,
            "order": order,
            "vars": _vars_list(var_names),
        },
    )
    _emit(state, payload, payload["result"])


@main.command("interior-test")
@click.argument("element")
@click.argument("generators", nargs=-1, required=True)
@click.option("--bound", default=10, show_default=True, help="test substitutions up to this index")
@_ring_order_options
@pass_state
def interior_test_cmd(state, element, generators, bound, ring, order, var_names):
    """Do all substitutions of ELEMENT up to --bound stay in the ideal?"""
    payload = state["client"].post(
        "/ideal/interior-test",
        {
            "element": element,
            "generators": list(generators),
            "bound": bound,
            "ring": ring,
            "order": order,
            "vars": _vars_list(var_names),
        },
    )
    _emit(state, payload, payload["result"])


# -- principal classifier ---------------------------------------------------------


@main.command("classify-principal")
@click.argument("expr")
@click.option("--ring", type=click.Choice(["poly", "laurent"]), default="laurent")
@click.option("--vars", "var_names", default=None)
@pass_state
def classify_cmd(state, expr, ring, var_names):
    """Classify a factored principal ideal: unit * prod((x/y - zeta(n,k))^m, ...)."""
    payload = state["client"].post(
        "/principal/classify",
        {"expr": expr, "ring": ring, "vars": _vars_list(var_names)},
    )
    _emit(state, payload, payload["power_closed"])


# -- variety ---------------------------------------------------------------------


def _split_coeffs(coeffs: str) -> list[str]:
    return [c.strip() for c in coeffs.split(",") if c.strip()]


@main.command("lines")
@click.argument("coeffs")
@pass_state
def lines_cmd(state, coeffs):
    """Zero-sum subsets of a linear form's COEFFS (comma separated, e.g. '1,-1')."""
    _emit(state, state["client"].post("/variety/lines", {"coeffs": _split_coeffs(coeffs)}))


@main.command("radical-linear")
@click.argument("coeffs")
@pass_state
def radical_linear_cmd(state, coeffs):
    """Radical of the closure of the linear form with COEFFS (comma separated)."""
    _emit(
        state,
        state["client"].post("/variety/radical-linear", {"coeffs": _split_coeffs(coeffs)}),
    )


@main.command("torus")
@click.option("--binomial", required=True, help="binomial equation, e.g. 'x^2*y - z^3'")
@click.option("--vars", "var_names", default=None)
@pass_state
def torus_cmd(state, binomial, var_names):
    """Exponent lattice of the torus subgroup cut out by a binomial."""
    _emit(
        state,
        state["client"].post(
            "/variety/torus", {"binomial": binomial, "vars": _vars_list(var_names)}
        ),
    )


@main.command("torus-iso")
@click.option("--nvars", type=int, required=True)
@click.argument("rows", nargs=-1, required=True)
@pass_state
def torus_iso_cmd(state, nvars, rows):
    """Isomorphism type from lattice rows like '2,-2'."""
    basis = [[int(v) for v in row.split(",")] for row in rows]
    _emit(
        state,
        state["client"].post(
            "/variety/torus-iso", {"nvars": nvars, "lattice_basis": basis}
        ),
    )


@main.command("it-gens")
@click.option("--point", required=True, help="coordinates: 0, 1, -1 or zeta(n,k), comma separated")
@pass_state
def it_gens_cmd(state, point):
    """Generators of the vanishing ideal of all power images of a point."""
    _emit(state, state["client"].post("/variety/it-gens", {"point": point}))


# -- certificates and serving ------------------------------------------------------


@main.command("certificates")
@click.option("--only", default=None, help="group tag (sec2..sec7) or id substring")
@click.option(
    "--stretch-budget",
    type=float,
    default=1800.0,
    show_default=True,
    help="seconds allowed for the budgeted stretch computation",
)
@pass_state
def certificates_cmd(state, only, stretch_budget):
    """Run the worked-example certificate suite; exit 0 only if all pass."""
    payload = state["client"].post(
        "/certificates/run", {"only": only, "stretch_budget_seconds": stretch_budget}
    )
    _emit(state, payload, payload["all_passed"])


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8787, show_default=True)
def serve_cmd(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
