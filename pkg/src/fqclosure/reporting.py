"""JSON and CSV emission for bound reports."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .bounds import BoundReport, fraction_str

CSV_COLUMNS = (
    "theorem_id", "q", "n", "d", "lhs", "rhs", "ratio", "holds", "ok",
    "realized_ratio", "reference_constant",
)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, Fraction):
        return fraction_str(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def report_row(r: BoundReport) -> dict:
    w = r.witness
    return {
        "theorem_id": r.theorem_id,
        "q": w.get("q"),
        "n": w.get("n"),
        "d": w.get("d"),
        "lhs": r.lhs,
        "rhs": r.rhs,
        "ratio": fraction_str(r.ratio),
        "holds": r.holds,
        "ok": r.ok,
        "realized_ratio": r.extras.get("realized_ratio"),
        "reference_constant": r.extras.get("reference_constant"),
    }


def reports_to_csv(reports: Iterable[BoundReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        row = report_row(r)
        w.writerow([_cell(row[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def reports_to_json(reports: Iterable[BoundReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True) + "\n"


def reports_from_json(text: str) -> list[BoundReport]:
    return [BoundReport.from_json(o) for o in json.loads(text)]


def report_emit(reports: list[BoundReport], fmt: str = "json", path: str | Path | None = None) -> str:
    """Render reports as JSON or CSV; write to ``path`` when given."""
    if fmt == "json":
        text = reports_to_json(reports)
    elif fmt == "csv":
        text = reports_to_csv(reports)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        Path(path).write_text(text)
    return text
