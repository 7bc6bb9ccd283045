"""Unit tests for the command line interface."""

import json

import pytest

from curvecensus.census import build_table, render_table_markdown
from curvecensus.main import main


def test_invariants_json(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["invariants", "10", "12", "3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["invariants"]["lambda"] == 25
    assert payload["triple"]["alpha"] == 5


def test_verdict_json(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["verdict", "9", "10", "3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["irreducible"] == "no"
    assert len(payload["components"]) == 2


def test_table_markdown(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["table", "--family", "gg4", "--md"]) == 0
    assert capsys.readouterr().out == render_table_markdown(build_table("gg4"))


def test_cubic_classify_json(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["cubic-classify", "--d", "10", "--g", "12", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["a_range"] == [9, 11]
    assert [s["very_ample"] for s in payload["solutions"]] == ["no", "no", "no"]
    assert payload["singular_cubics"]["excluded"] is True


def test_neg_curves_json(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["neg-curves", "--n", "6", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 27


def test_class_commands(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["genus", "--class", "(9;3^5,2)", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["pa"] == 12
    assert main(["intersect", "--x", "(5,6)", "--y", "(1,1)", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["intersection"] == 11
    assert main(["very-ample", "--class", "(3;1^5,0)", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["very_ample"] is False
    assert payload["non_positive_on"] == ["(0;0,0,0,0,0,-1)"]


def test_liaison_json(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["liaison", "--d", "10", "--g", "11", "--s", "4", "--t", "4", "--json"]
    assert main(argv) == 0
    assert json.loads(capsys.readouterr().out)["component_dim"] == 40


def test_recipe_and_compounded(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["recipe", "--g", "14", "--r", "4", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["valid"] is True
    assert main(["compounded", "--e", "10", "--g", "17", "--r", "9", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["excludes_very_ample"] is True
    assert len(payload["cases"]) == 4


def test_rich_output(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["quadric-models", "--e", "10", "--g", "12"]) == 0
    assert main(["libraries"]) == 0
    assert "H_6_3_3" in capsys.readouterr().out


def test_precondition_failure_json(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["verdict", "5", "2", "2", "--json"]) == 2
    record = json.loads(capsys.readouterr().err)
    assert record["error"] == "out-of-range"


def test_precondition_failures() -> None:
    assert main(["table", "--family", "r+10"]) == 2
    assert main(["genus", "--class", "(1;"]) == 2
    assert main(["liaison", "--d", "9", "--g", "7", "--s", "4", "--t", "4"]) == 2
    assert main(["compounded", "--e", "12", "--g", "20", "--r", "10"]) == 2


def test_scan_exit_code(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["scan", "--alpha", "4", "--r-max", "6", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["consistent"] is True


def test_very_ample_criterion_only(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["very-ample", "--class", "(3;1^7)", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["very_ample"] is True
    assert payload["criterion_only"] is True
    assert main(["very-ample", "--class", "(3;1^6)", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["criterion_only"] is False
    assert main(["very-ample", "--class", "(1,3)", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "class": "(1,3)",
        "very_ample": True,
        "criterion_only": False,
        "non_positive_on": [],
    }


def test_intersect_mixed_surfaces(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["intersect", "--x", "(1,1)", "--y", "(1;0,0)", "--json"]) == 2
    record = json.loads(capsys.readouterr().err)
    assert record["error"] == "mixed-surfaces"
