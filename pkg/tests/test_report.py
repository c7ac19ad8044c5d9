import csv
import io
import json

import pytest

from degpow import graph6_decode
from degpow.constructions import clique, cycle
from degpow.report import COLUMNS, render_record, report_table
from degpow.search import Objective, search_max


@pytest.fixture(scope="module")
def results():
    return [search_max(n, [clique(3)], Objective.edges()) for n in (6, 4, 5)]


def test_empty_list_is_header_only():
    assert report_table([], "csv") == ",".join(COLUMNS) + "\n"
    assert report_table([], "table").split() == list(COLUMNS)
    assert json.loads(report_table([], "json")) == []


def test_single_table_row(results):
    text = report_table(results[:1], "table")
    header, row = text.splitlines()
    assert header.split() == list(COLUMNS)
    cells = row.split()
    assert cells[0] == "6" and cells[3] == "9"
    assert graph6_decode(cells[5]).num_edges == 9
    # aligned: each column starts at the same offset in header and row
    assert header.index("optimum") == row.index(" 9 ") + 1


def test_rows_sorted_by_n(results):
    rows = list(csv.reader(io.StringIO(report_table(results, "csv"))))
    assert rows[0] == list(COLUMNS)
    assert [r[0] for r in rows[1:]] == ["4", "5", "6"]
    assert [r[3] for r in rows[1:]] == ["4", "6", "9"]
    assert all(r[7] == "true" for r in rows[1:])


def test_json_records(results):
    recs = json.loads(report_table(results, "json"))
    assert [r["n"] for r in recs] == [4, 5, 6]
    for r in recs:
        assert set(r) == {"objective", "n", "family", "optimum", "witnesses", "explored", "complete"}
        assert isinstance(r["optimum"], str)
        assert r["witnesses"] == sorted(r["witnesses"])
        for w in r["witnesses"]:
            graph6_decode(w)


def test_family_joined():
    res = search_max(5, [clique(3), cycle(4)], Objective.edges())
    row = list(csv.reader(io.StringIO(report_table([res], "csv"))))[1]
    assert row[2].split(";") == list(res.family)


def test_unknown_format(results):
    with pytest.raises(ValueError):
        report_table(results, "xml")


def test_render_record_formats():
    rec = {"a": 1, "bb": [1, 2]}
    assert render_record(rec, "table") == "a   1\nbb  1 2\n"
    assert render_record(rec, "csv") == "a,bb\n1,1 2\n"
    assert json.loads(render_record(rec, "json")) == rec
