"""
This module renders verdicts and tables as Markdown and JSON.

Both renderings are deterministic: JSON keys are sorted
and rows keep the order in which the table lists them.
"""

import json
from typing import Any, Optional, Sequence

from curvecensus.utils import Tristate

from .records import Verdict
from .tables import CensusTable, TableEntry, TableFamily

SCHEMA_VERSION = "census/1"
JSON_INDENT = 2


def dump_json(payload: Any) -> str:
    text = json.dumps(
        payload, indent=JSON_INDENT, sort_keys=True, ensure_ascii=False
    )
    return text + "\n"


def _cell(value: object) -> str:
    return str(value).replace("|", "\\|")


def write_table_md(
    headers: Sequence[str], rows: Sequence[Sequence[object]]
) -> str:
    header_line = "| " + " | ".join(headers) + " |"
    separator_line = "| " + " | ".join(["---"] * len(headers)) + " |"
    row_lines = [
        "| " + " | ".join(_cell(value) for value in row) + " |" for row in rows
    ]
    return "\n".join([header_line, separator_line, *row_lines])


def _optional(value: Optional[object]) -> str:
    return "" if value is None else str(value)


def _flag(value: Optional[bool]) -> str:
    if value is None:
        return ""
    return "yes" if value else "no"


def _remark(entry: TableEntry) -> str:
    if entry.remark:
        return entry.remark
    return f"[{entry.citation}]" if entry.citation else ""


def _description(entry: TableEntry) -> str:
    if entry.component:
        return entry.description
    return f"{entry.description} (not a component)"


def render_table_markdown(table: CensusTable) -> str:
    """Render a table as a Markdown section."""
    if table.family is TableFamily.GG4:
        headers = ["(d,g)", "Description", "Remark"]
        rows = [
            [row.label if index == 0 else "", _description(entry), _remark(entry)]
            for row in table.rows
            for index, entry in enumerate(row.entries)
        ]
    else:
        headers = [
            "(d,g,r)",
            "Description",
            "Class",
            "C_E",
            "Base locus",
            "G-level dim",
            "Irreducibility",
        ]
        rows = [
            [
                row.label if index == 0 else "",
                _description(entry),
                _optional(entry.curve_class),
                _optional(entry.stratum),
                _flag(entry.base_locus),
                _optional(entry.glevel_dim),
                _optional(row.irreducible) if index == 0 else "",
            ]
            for row in table.rows
            for index, entry in enumerate(row.entries)
        ]
    return f"## {table.title}\n\n{write_table_md(headers, rows)}\n"


def render_table_json(table: CensusTable) -> str:
    payload = {"schema": SCHEMA_VERSION, **table.model_dump(mode="json")}
    return dump_json(payload)


def render_verdict_json(v: Verdict) -> str:
    payload = {"schema": SCHEMA_VERSION, **v.model_dump(mode="json")}
    return dump_json(payload)


def render_verdict_markdown(v: Verdict) -> str:
    """Render a verdict as a short Markdown report."""
    lines = [
        f"## {v.triple}",
        "",
        f"- index of speciality: {v.alpha}",
        f"- exists: {v.exists}",
        f"- irreducible: {v.irreducible}",
    ]
    if v.components:
        lines += ["", "### Components", ""]
        lines.append(
            write_table_md(
                ["Description", "G-level dim", "Dimension", "Expected"],
                [
                    [
                        c.description,
                        _optional(c.glevel_dim),
                        _optional(c.dim),
                        c.dim_expected,
                    ]
                    for c in v.components
                ],
            )
        )
    if v.notes:
        lines += ["", "### Notes", ""] + [f"- {note}" for note in v.notes]
    lines += ["", "### Citations", ""] + [f"- {anchor}" for anchor in v.citations]
    return "\n".join(lines) + "\n"


def tristate_style(value: Optional[Tristate]) -> str:
    """Rich style for a three-valued answer."""
    if value is Tristate.YES:
        return "green"
    if value is Tristate.NO:
        return "red"
    return "yellow"
