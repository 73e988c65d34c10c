import json

import pytest

from tcurves import NotUnimodular, ParseError, PointOutOfRange, builtin, sweep
from tcurves.io import (
    histogram_csv,
    parse_triangulation,
    read_histogram_csv,
    read_report_jsonl,
    read_triangulation,
    report_jsonl,
    triangulation_to_json,
    write_report,
    write_triangulation,
)


def test_triangulation_roundtrip(tmp_path):
    T = builtin("bowtie8")
    path = tmp_path / "bowtie.json"
    write_triangulation(T, str(path))
    back = read_triangulation(str(path))
    assert back.edges == T.edges
    assert back.triangles == T.triangles


def test_duplicate_edge_rejected():
    data = triangulation_to_json(builtin("delaunay-2"))
    data["edges"].append(data["edges"][0][::-1])  # same edge, swapped ends
    with pytest.raises(ParseError) as err:
        parse_triangulation(data)
    assert err.value.position == len(data["edges"]) - 1


def test_point_out_of_range_diagnostic():
    data = {"degree": 8, "edges": [[[9, 0], [8, 0]]]}
    with pytest.raises(PointOutOfRange):
        parse_triangulation(data)


def test_malformed_edge_position():
    data = {"degree": 2, "edges": [[[0, 0], [1, 0]], [[0, 0]]]}
    with pytest.raises(ParseError) as err:
        parse_triangulation(data)
    assert err.value.position == 1


def test_skip_unimodularity_flag(tmp_path):
    data = {
        "degree": 1,
        "edges": [[[0, 0], [1, 0]], [[0, 0], [0, 1]], [[1, 0], [0, 1]]],
    }
    path = tmp_path / "t.json"
    path.write_text(json.dumps(data))
    read_triangulation(str(path))  # fine: unimodular
    data2 = {
        "degree": 2,
        "edges": [
            [[0, 0], [2, 0]], [[0, 0], [0, 2]], [[2, 0], [0, 2]],
        ],
    }
    path2 = tmp_path / "t2.json"
    path2.write_text(json.dumps(data2))
    with pytest.raises(NotUnimodular):
        read_triangulation(str(path2))
    T = read_triangulation(str(path2), require_unimodular=False)
    assert len(T.triangles) == 1


def test_report_serialization_roundtrip(tmp_path):
    T = builtin("delaunay-3")
    rep = sweep(T)
    jsonl = tmp_path / "r.jsonl"
    csvp = tmp_path / "h.csv"
    write_report(rep, str(jsonl), str(csvp))

    header, records = read_report_jsonl(str(jsonl))
    assert header["degree"] == 3
    assert header["fingerprint"] == T.fingerprint()
    assert header["total_classified"] == rep.total_classified
    assert [r["scheme"] for r in records] == sorted(rep.scheme_map)
    for r in records:
        count, wit = rep.scheme_map[r["scheme"]]
        assert r["count"] == count
        assert r["witness"] == rep.witness_bitstring(r["scheme"])

    hist = read_histogram_csv(str(csvp))
    assert hist == {k: c for k, c in enumerate(rep.oval_histogram)}


def test_report_text_formats():
    rep = sweep(builtin("delaunay-2"))
    text = report_jsonl(rep)
    lines = text.strip().split("\n")
    assert json.loads(lines[0])["mode"] == "sweep"
    assert histogram_csv(rep).startswith("ovals,count\n0,")


def test_invalid_json_diagnostic(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{nope")
    with pytest.raises(ParseError):
        read_triangulation(str(p))
