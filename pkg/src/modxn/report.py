"""Deterministic JSON reports and the plain-text tables derived from them."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from . import __version__


@dataclass
class Report:
    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    rows: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def jsonable(obj: Any) -> Any:
    """Integers become decimal strings; Fractions ``a/b``; enums their value."""
    if isinstance(obj, Enum):
        return obj.value
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in obj]
        return sorted(items) if isinstance(obj, (set, frozenset)) else items
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if hasattr(obj, "coords"):
        return str(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def report_payload(report: Report) -> dict:
    return {
        "command": report.command,
        "inputs": jsonable(report.inputs),
        "rows": jsonable(report.rows),
        "notes": list(report.notes),
    }


def report_to_json(report: Report) -> str:
    """Header line with the tool version, then the payload (byte-stable for fixed inputs)."""
    header = json.dumps({"tool": "modxn", "version": __version__})
    return header + "\n" + json.dumps(report_payload(report), indent=2, ensure_ascii=False) + "\n"


def render_table(report: Report) -> str:
    payload = report_payload(report)
    rows = payload["rows"]
    lines = [f"# {payload['command']} " + " ".join(f"{k}={v}" for k, v in payload["inputs"].items())]
    if rows:
        nested = {k for r in rows for k, v in r.items() if isinstance(v, (dict, list))}
        cols = [k for k in rows[0] if k not in nested]
        cells = [[_cell(r.get(c)) for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        lines.append("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
        lines.extend("  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells)
    for note in payload["notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def _cell(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)
