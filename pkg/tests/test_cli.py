import json

from click.testing import CliRunner

from powerclosure.cli import main

runner = CliRunner()


def run(*args):
    result = runner.invoke(main, list(args))
    return result


def test_star_command():
    result = run("star", "x^2 - 1")
    assert result.exit_code == 0
    assert "phi_1 * phi_2" in result.output


def test_circle_zero_ideal():
    result = run("circle", "x - 2")
    assert result.exit_code == 0
    assert result.output.strip() == "(0)"


def test_is_powered_exit_codes():
    assert run("is-powered", "x^2 - 1").exit_code == 0
    assert run("is-powered", "x - 2").exit_code == 1


def test_closure_command():
    result = run("closure", "y - 2*x")
    assert result.exit_code == 0
    assert "y - 2*x" in result.output and "x^2" in result.output


def test_member_command():
    assert run("member", "x^2", "y - 2*x", "y^2 - 2*x^2").exit_code == 0
    assert run("member", "x", "y - 2*x", "y^2 - 2*x^2").exit_code == 1


def test_intersect_command():
    result = run(
        "intersect", "--left", "y - 2*x", "--left", "x^2",
        "--right", "y - 3*x", "--right", "x^2",
    )
    assert result.exit_code == 0
    assert "x^2, x*y, y^2" in result.output


def test_laurent_flag():
    result = run("groebner", "x*y - x", "--ring", "laurent")
    assert result.exit_code == 0
    assert result.output.strip() == "{y - 1}"


def test_json_flag_stable():
    first = run("--json", "closure", "y - 2*x")
    second = run("--json", "closure", "y - 2*x")
    assert first.exit_code == 0
    assert first.output == second.output
    payload = json.loads(first.output)
    assert payload["basis"] == ["y - 2*x", "x^2"]


def test_classify_command():
    assert run("classify-principal", "prod((x/y - 1))").exit_code == 0
    assert run("classify-principal", "prod((x/y - 2))").exit_code == 1


def test_lines_and_radical_linear():
    result = run("lines", "1,-1")
    assert result.exit_code == 0 and "{1,2}" in result.output
    result = run("radical-linear", "1,1")
    assert result.exit_code == 0 and result.output.strip() == "{x, y}"


def test_torus_commands():
    result = run("torus", "--binomial", "x^2*y - z^3")
    assert result.exit_code == 0 and "[2, 1, -3]" in result.output
    result = run("torus-iso", "--nvars", "2", "2,-2")
    assert result.exit_code == 0 and "torus rank 1" in result.output


def test_it_gens_command():
    result = run("it-gens", "--point", "zeta(4,1),zeta(4,3)")
    assert result.exit_code == 0
    assert "(" in result.output


def test_parse_error_is_clean_failure():
    result = run("star", "x + $")
    assert result.exit_code != 0
    assert "position" in result.output


def test_certificates_subset():
    result = run("certificates", "--only", "linear-closure-basis")
    assert result.exit_code == 0
    assert "PASS" in result.output


def test_interior_test_command():
    assert (
        run("interior-test", "x^2 - y^2", "x - y", "--bound", "8").exit_code == 0
    )
    assert run("interior-test", "x - 2", "x - 2", "--bound", "2").exit_code == 1
