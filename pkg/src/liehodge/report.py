"""Deterministic report documents and their text / CSV / JSON renderings.

JSON layout::

    {"command": str,
     "params": {name: value, ...},
     "blocks": [{"title": str, "paper_anchor": str,
                 "columns": [str, ...], "rows": [[cell, ...], ...]}, ...]}

Cells are integers, strings, or lists of integers.  Keys are emitted in a
fixed order and no timestamps are recorded, so identical inputs give
byte-identical output.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

FORMATS = ("text", "csv", "json")


@dataclass
class Block:
    title: str
    paper_anchor: str
    columns: list[str]
    rows: list[list[Any]] = field(default_factory=list)

    def add(self, *cells) -> None:
        if len(cells) != len(self.columns):
            raise ValueError(f"block {self.title!r} expects {len(self.columns)} cells, got {len(cells)}")
        self.rows.append([_cell(c) for c in cells])

    def column(self, name: str) -> list[Any]:
        k = self.columns.index(name)
        return [r[k] for r in self.rows]


@dataclass
class ReportDocument:
    command: str
    params: dict[str, Any]
    blocks: list[Block] = field(default_factory=list)

    def block(self, title: str) -> Block:
        for b in self.blocks:
            if b.title == title:
                return b
        raise KeyError(title)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "params": {k: _cell(self.params[k]) for k in sorted(self.params)},
            "blocks": [
                {"title": b.title, "paper_anchor": b.paper_anchor, "columns": list(b.columns), "rows": b.rows}
                for b in self.blocks
            ],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ReportDocument":
        validate(data)
        blocks = [Block(b["title"], b["paper_anchor"], list(b["columns"]), [list(r) for r in b["rows"]]) for b in data["blocks"]]
        return cls(data["command"], dict(data["params"]), blocks)


def _cell(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value if value is None else str(value).lower()
    if isinstance(value, int):
        return int(value)
    if isinstance(value, str):
        return value
    if isinstance(value, (tuple, list)):
        return [_cell(v) for v in value]
    if hasattr(value, "value"):  # enums
        return str(value.value)
    if hasattr(value, "denominator"):
        if value.denominator != 1:
            raise TypeError(f"non-integral value {value} in report")
        return int(value)
    raise TypeError(f"unsupported report cell {value!r}")


def validate(data: Any) -> None:
    """Raise ``ValueError`` unless ``data`` follows the documented schema."""
    if not isinstance(data, dict) or list(data) != ["command", "params", "blocks"]:
        raise ValueError("top level must be {command, params, blocks} in that order")
    if not isinstance(data["command"], str) or not isinstance(data["params"], dict):
        raise ValueError("command must be a string and params an object")
    for b in data["blocks"]:
        if list(b) != ["title", "paper_anchor", "columns", "rows"]:
            raise ValueError(f"bad block keys {list(b)}")
        for row in b["rows"]:
            if len(row) != len(b["columns"]):
                raise ValueError(f"row {row} does not match columns {b['columns']}")
            for c in row:
                _check_json_cell(c)


def _check_json_cell(c: Any) -> None:
    if isinstance(c, float):
        raise ValueError("floats are not allowed in reports")
    if isinstance(c, list):
        for x in c:
            _check_json_cell(x)
    elif c is not None and not isinstance(c, (int, str)):
        raise ValueError(f"bad cell {c!r}")


def _text_cell(c: Any) -> str:
    if isinstance(c, list):
        return "(" + ",".join(_text_cell(x) for x in c) + ")"
    return "" if c is None else str(c)


def render(doc: ReportDocument, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(doc)
    if fmt == "text":
        return _render_text(doc)
    raise ValueError(f"unknown format {fmt!r}")


def _render_csv(doc: ReportDocument) -> str:
    buf = io.StringIO()
    for k, b in enumerate(doc.blocks):
        if k:
            buf.write("\n")
        buf.write(f"# {b.title}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(b.columns)
        for row in b.rows:
            w.writerow([" ".join(map(str, c)) if isinstance(c, list) else _text_cell(c) for c in row])
    return buf.getvalue()


def _render_text(doc: ReportDocument) -> str:
    lines = [f"{doc.command}: " + ", ".join(f"{k}={_text_cell(_cell(v))}" for k, v in sorted(doc.params.items()))]
    for b in doc.blocks:
        lines.append("")
        lines.append(f"== {b.title} [{b.paper_anchor}]")
        table = [b.columns] + [[_text_cell(c) for c in row] for row in b.rows]
        widths = [max(len(r[k]) for r in table) for k in range(len(b.columns))]
        for i, r in enumerate(table):
            lines.append("  ".join(s.rjust(wd) for s, wd in zip(r, widths)).rstrip())
            if i == 0:
                lines.append("  ".join("-" * wd for wd in widths))
    return "\n".join(lines) + "\n"

