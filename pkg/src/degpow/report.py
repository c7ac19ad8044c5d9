"""Rendering of search results as json, csv or an aligned table.

CSV columns, in order: ``n, objective, family, optimum, witness_count,
first_witness, explored, complete``.  ``family`` is the graph6 list joined
by ``;``.  Rows are sorted by ``n`` then objective label.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .search import SearchResult

FORMATS = ("json", "csv", "table")
COLUMNS = ("n", "objective", "family", "optimum", "witness_count", "first_witness", "explored", "complete")


def _row(res: SearchResult) -> list[str]:
    w = res.witness_graph6()
    return [
        str(res.n),
        res.objective,
        ";".join(res.family),
        str(res.optimum),
        str(len(w)),
        w[0] if w else "",
        str(res.explored),
        "true" if res.complete else "false",
    ]


def report_table(results: Sequence[SearchResult], fmt: str = "table") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    ordered = sorted(results, key=lambda r: (r.n, r.objective))
    if fmt == "json":
        return json.dumps([r.to_record() for r in ordered], indent=2) + "\n"
    rows = [list(COLUMNS)] + [_row(r) for r in ordered]
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    return render_columns(rows)


def render_columns(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def render_record(record: dict, fmt: str) -> str:
    """One flat record (non-search commands) in the requested format."""
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    flat = {k: " ".join(map(str, v)) if isinstance(v, list) else str(v) for k, v in record.items()}
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(flat))
        w.writerow(list(flat.values()))
        return buf.getvalue()
    width = max((len(k) for k in flat), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in flat.items())
