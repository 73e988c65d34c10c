"""File codecs: triangulation JSON, sign bitstrings, report JSONL and CSV.

Triangulation interchange format:

    {"degree": d, "edges": [[[i1, j1], [i2, j2]], ...]}

Edges are unordered pairs; duplicates are rejected with their position.
Reports serialize as JSON Lines (one header record, then one record per
scheme sorted by scheme string) plus a CSV oval histogram; both round-trip
through the reader below.
"""

from __future__ import annotations

import csv
import json
import os

from .errors import ParseError
from .lattice import Triangulation, normalize_edge, validate_triangulation
from .signs import SignDistribution
from .sweep import SweepReport


def triangulation_to_json(T: Triangulation) -> dict:
    return {
        "degree": T.degree,
        "edges": [[[p[0], p[1]], [q[0], q[1]]] for p, q in T.edges],
    }


def write_triangulation(T: Triangulation, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(triangulation_to_json(T), fh)
        fh.write("\n")


def parse_triangulation(data: dict, require_unimodular: bool = True) -> Triangulation:
    if not isinstance(data, dict) or "degree" not in data or "edges" not in data:
        raise ParseError("triangulation JSON needs 'degree' and 'edges' keys")
    d = data["degree"]
    if not isinstance(d, int):
        raise ParseError(f"degree must be an integer, got {d!r}")
    seen = set()
    edges = []
    for k, raw in enumerate(data["edges"]):
        try:
            (p, q) = raw
            edge = ((int(p[0]), int(p[1])), (int(q[0]), int(q[1])))
        except (TypeError, ValueError, IndexError):
            raise ParseError(f"malformed edge {raw!r}", position=k) from None
        key = normalize_edge(*edge)
        if key in seen:
            raise ParseError(f"duplicate edge {raw!r}", position=k)
        seen.add(key)
        edges.append(edge)
    return validate_triangulation(d, edges, require_unimodular=require_unimodular)


def read_triangulation(path: str, require_unimodular: bool = True) -> Triangulation:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in {path}: {exc}") from None
    return parse_triangulation(data, require_unimodular=require_unimodular)


def read_signs(d: int, text: str) -> SignDistribution:
    return SignDistribution.from_bitstring(d, text.strip())


def _atomic_write(path: str, content: str) -> None:
    tmp = path + ".tmp"
    try:
        with open(tmp, "w") as fh:
            fh.write(content)
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.remove(tmp)


def report_jsonl(report: SweepReport) -> str:
    header = {
        "degree": report.degree,
        "fingerprint": report.fingerprint,
        **report.params,
        "total_classified": report.total_classified,
    }
    lines = [json.dumps(header, sort_keys=True)]
    for scheme in sorted(report.scheme_map):
        count, _ = report.scheme_map[scheme]
        lines.append(
            json.dumps(
                {
                    "scheme": scheme,
                    "count": count,
                    "witness": report.witness_bitstring(scheme),
                },
                sort_keys=True,
            )
        )
    return "\n".join(lines) + "\n"


def histogram_csv(report: SweepReport) -> str:
    rows = ["ovals,count"]
    rows += [f"{k},{c}" for k, c in enumerate(report.oval_histogram)]
    return "\n".join(rows) + "\n"


def write_report(report: SweepReport, jsonl_path: str | None, csv_path: str | None):
    if jsonl_path:
        _atomic_write(jsonl_path, report_jsonl(report))
    if csv_path:
        _atomic_write(csv_path, histogram_csv(report))


def read_report_jsonl(path: str) -> tuple[dict, list[dict]]:
    """Header record and scheme records, as written by :func:`report_jsonl`."""
    with open(path) as fh:
        lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    if not lines:
        raise ParseError(f"empty report {path}")
    try:
        header = json.loads(lines[0])
        records = [json.loads(ln) for ln in lines[1:]]
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSONL in {path}: {exc}") from None
    return header, records


def read_histogram_csv(path: str) -> dict[int, int]:
    with open(path) as fh:
        reader = csv.DictReader(fh)
        return {int(row["ovals"]): int(row["count"]) for row in reader}
