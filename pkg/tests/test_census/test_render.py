"""Unit tests for render module."""

import json

from curvecensus.census import (
    build_table,
    render_table_json,
    render_table_markdown,
    render_verdict_json,
    render_verdict_markdown,
    verdict,
)
from curvecensus.census.render import dump_json, tristate_style, write_table_md
from curvecensus.invariants import Triple
from curvecensus.utils import Tristate


def test_write_table_md() -> None:
    assert write_table_md(["a", "b"], [["x|y", 1]]) == (
        "| a | b |\n| --- | --- |\n| x\\|y | 1 |"
    )


def test_dump_json_is_sorted() -> None:
    assert dump_json({"b": 1, "a": "Σ"}) == '{\n  "a": "Σ",\n  "b": 1\n}\n'


def test_table_markdown() -> None:
    text = render_table_markdown(build_table("r+8"))
    lines = text.splitlines()
    assert lines[0] == "## H^L_{2r+4,r+8,r} for 3 <= r <= 8"
    assert lines[2].startswith("| (d,g,r) | Description | Class |")
    assert "Σ_{\\|(5,5)\\|,4}" in text
    assert text.endswith("|\n")


def test_table_markdown_is_stable() -> None:
    first = render_table_markdown(build_table("r+9"))
    assert render_table_markdown(build_table("r+9")) == first


def test_gg4_markdown() -> None:
    lines = render_table_markdown(build_table("gg4")).splitlines()
    assert lines[2] == "| (d,g) | Description | Remark |"
    assert len(lines) == 4 + 9


def test_table_json() -> None:
    payload = json.loads(render_table_json(build_table("r+9")))
    assert payload["schema"] == "census/1"
    assert payload["family"] == "r+9"
    assert len(payload["rows"]) == 10
    assert render_table_json(build_table("r+9")) == render_table_json(
        build_table("r+9")
    )


def test_verdict_renderings() -> None:
    v = verdict(Triple.of(10, 12, 3))
    payload = json.loads(render_verdict_json(v))
    assert payload["exists"] == "yes"
    assert payload["irreducible"] == "no"
    assert [c["dim"] for c in payload["components"]] == [40, 40]
    text = render_verdict_markdown(v)
    assert text.startswith("## (10,12,3)\n")
    assert "- irreducible: no" in text
    assert "### Components" in text


def test_tristate_style() -> None:
    assert tristate_style(Tristate.YES) == "green"
    assert tristate_style(Tristate.NO) == "red"
    assert tristate_style(None) == "yellow"
