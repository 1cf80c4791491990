"""Acceptance gate: every criterion runs at its stated budget, one line each.

The checks live in powerclosure.certificates so the CLI `certificates`
subcommand and this module exercise the identical code paths.  The budgeted
stretch computation reports a timeout instead of failing the build when it
cannot finish (it finishes in well under a second here).
"""

import os

import pytest

from powerclosure.certificates import build_certificates

STRETCH_BUDGET = float(os.environ.get("POWERCLOSURE_STRETCH_BUDGET", "1800"))

CERTIFICATES = {c.cert_id: c for c in build_certificates(STRETCH_BUDGET)}

# criterion number -> certificate id, in the order the criteria are stated
CRITERIA = [
    ("1", "linear-closure-basis"),
    ("2", "intersection-strictness"),
    ("3", "star-circle-exponents"),
    ("4", "star-gcd-oracle"),
    ("5", "psi-machinery"),
    ("6", "laurent-linear-closure"),
    ("7", "laurent-intersection-strictness"),
    ("8", "closure-operator-laws"),
    ("9", "classifier-groebner-agreement"),
    ("10", "radical-variety-structure"),
    ("11", "power-sum-triangular-generators"),
]


@pytest.mark.parametrize("number,cert_id", CRITERIA, ids=[f"criterion-{n}" for n, _ in CRITERIA])
def test_acceptance_criterion(number, cert_id, capsys):
    cert = CERTIFICATES[cert_id]
    result = cert.run()
    status = "PASS" if result.passed else ("TIMEOUT" if result.timed_out else "FAIL")
    with capsys.disabled():
        print(
            f"\ncriterion {number:>2} [{result.group}] {cert_id}: {status} "
            f"({result.seconds:.2f}s <= {cert.budget_seconds:.0f}s) - {result.detail}"
        )
    if result.timed_out:
        pytest.skip(
            f"criterion {number} did not finish within its {cert.budget_seconds:.0f}s "
            "budget; reported per the stated policy, not a build failure"
        )
    assert result.passed, result.detail
