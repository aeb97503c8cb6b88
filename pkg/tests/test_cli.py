import json
from fractions import Fraction
from pathlib import Path

import pytest

from qhodge.cli import farey_grid, parse_alpha_grid, render_text, run
from qhodge.poly import format_rational

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "hodge_cusp.json": ["hodge", "--f", "x^2+y^3", "--vars", "x,y", "--alpha", "1/10", "--k", "2"],
    "bernstein_a4.json": ["bernstein", "--f", "x^2+y^5", "--vars", "x,y"],
    "compare_a4.json": ["compare", "--f", "x^2+y^5", "--vars", "x,y", "--alpha", "19/20", "--k", "1"],
    "newton_remark.json": ["newton", "--f", "(x+y)^2+x*z+z^2", "--vars", "x,y,z"],
    "analyze_cusp.json": ["analyze", "--f", "x^2+y^3", "--vars", "x,y", "--alpha-grid", "1/10,1/2,1"],
}


def invoke(capsys, argv):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def as_json(capsys, argv):
    code, out, _ = invoke(capsys, argv + ["--format", "json"])
    return code, json.loads(out)


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_files_are_byte_identical(capsys, name):
    _, out, _ = invoke(capsys, GOLDEN_CASES[name] + ["--format", "json"])
    assert out == (GOLDEN / name).read_text()


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_text_is_a_rendering_of_the_json(capsys, name):
    _, out, _ = invoke(capsys, GOLDEN_CASES[name])
    assert out.rstrip("\n") == render_text(json.loads((GOLDEN / name).read_text()))


def test_hodge_cusp(capsys):
    code, out, _ = invoke(capsys, GOLDEN_CASES["hodge_cusp.json"])
    assert code == 0
    assert "I_0 = (1)" in out and "I_1 = (x, y)" in out and "I_2 = (x^2, x*y, y^3)" in out
    _, data = as_json(capsys, GOLDEN_CASES["hodge_cusp.json"])
    assert data["chains"]["recursive"] == [["1"], ["x", "y"], ["x^2", "x*y", "y^3"]]
    assert data["methods_agree"] is True


def test_bernstein_a4(capsys):
    code, out, _ = invoke(capsys, GOLDEN_CASES["bernstein_a4.json"])
    assert code == 0
    assert "(s+1)(s+7/10)(s+9/10)(s+11/10)(s+13/10)" in out


def test_underdetermined_weights_exit_3(capsys):
    code, out, err = invoke(capsys, ["analyze", "--f", "x*y", "--vars", "x,y"])
    assert code == 3
    assert "underdetermined — supply weights explicitly" in err
    code, data = as_json(capsys, ["analyze", "--f", "x*y", "--vars", "x,y"])
    assert code == 3 and data["error"]["exit_code"] == 3
    assert data["error"]["message"] == "underdetermined — supply weights explicitly"


def test_explicit_weights_rescue(capsys):
    code, data = as_json(capsys, ["analyze", "--f", "x*y", "--vars", "x,y", "--weights", "1/2,1/2",
                                  "--alpha", "1/2"])
    assert code == 0
    assert data["milnor_number"] == 1
    assert data["generating_levels"][0]["agree"]


@pytest.mark.parametrize("argv", [
    ["hodge", "--f", "x^2+", "--vars", "x,y", "--alpha", "1/2", "--k", "1"],
    ["hodge", "--f", "x^2+y^3", "--vars", "x,y", "--k", "1"],
    ["hodge", "--f", "x^2+y^3", "--vars", "x,y", "--alpha", "3/2", "--k", "1"],
    ["hodge", "--f", "x^2+y^3", "--vars", "x,x", "--alpha", "1/2", "--k", "1"],
    ["conjecture", "--f", "x^2+y^3", "--vars", "x,y"],
    ["bernstein", "--f", "x^2+y^3", "--vars", "x,y", "--weights", "1/2"],
    ["bernstein", "--f", "1+x^2", "--vars", "x,y"],
])
def test_input_errors_exit_2(capsys, argv):
    code, data = as_json(capsys, argv)
    assert code == 2
    assert set(data["error"]) >= {"exit_code", "type", "message"}


def test_parse_error_position_in_json(capsys):
    _, data = as_json(capsys, ["newton", "--f", "x^2 # y", "--vars", "x,y"])
    assert data["error"]["position"] == 4


@pytest.mark.parametrize("argv", [
    ["bernstein", "--f", "x^2*y^2+x^5+y^5", "--vars", "x,y"],
    ["hodge", "--f", "(x+y)^2+x*z+z^2", "--vars", "x,y,z", "--alpha", "1", "--k", "0", "--mode", "newton"],
    ["analyze", "--f", "x^2", "--vars", "x,y", "--weights", "1/2,1"],
    ["microlocal", "--f", "x^2*y^2+x^5+y^5", "--vars", "x,y", "--alpha", "1", "--k", "1"],
])
def test_precondition_failures_exit_3(capsys, argv):
    code, _, err = invoke(capsys, argv)
    assert code == 3 and err


def test_newton_auto_fallback(capsys):
    code, data = as_json(capsys, ["hodge", "--f", "x^2*y^2+x^5+y^5", "--vars", "x,y", "--alpha", "1",
                                  "--k", "1"])
    assert code == 0 and data["mode"] == "newton"
    assert "recursive" not in data["chains"]


def test_newton_forced_on_weighted_input(capsys):
    code, weighted = as_json(capsys, ["hodge", "--f", "x^2+y^5", "--vars", "x,y", "--alpha", "1/3", "--k", "2"])
    code2, newton = as_json(capsys, ["hodge", "--f", "x^2+y^5", "--vars", "x,y", "--alpha", "1/3", "--k", "2",
                                     "--mode", "newton"])
    assert code == code2 == 0
    assert newton["chains"]["direct"] == weighted["chains"]["direct"]


def test_microlocal_and_conjecture(capsys):
    _, data = as_json(capsys, ["microlocal", "--f", "x^2+y^5", "--vars", "x,y", "--alpha", "19/20", "--k", "1"])
    assert data["chain"][1] == ["x^2", "x*y^2", "y^6"]
    code, data = as_json(capsys, ["conjecture", "--f", "x^2+y^3", "--vars", "x,y", "--alpha-grid", "farey:12",
                                  "--k", "2", "--workers", "2"])
    assert code == 0 and data["counterexamples"] == 0
    assert [r["alpha"] for r in data["reports"]] == [format_rational(a) for a in farey_grid(12)]


def test_invariant_breach_exit_4(capsys, monkeypatch):
    import qhodge.cli as cli
    from qhodge import InvariantBreach

    def boom(job):
        raise InvariantBreach("forced")

    monkeypatch.setitem(cli.HANDLERS, "compare", boom)
    code, data = as_json(capsys, ["compare", "--f", "x^2+y^3", "--vars", "x,y", "--alpha", "1", "--k", "1"])
    assert code == 4 and data["error"]["type"] == "InvariantBreach"


def test_alpha_grid_parsing():
    assert parse_alpha_grid("1/2, 1") == [Fraction(1, 2), 1]
    assert len(parse_alpha_grid("farey:12")) == 46
    assert parse_alpha_grid("") == []
