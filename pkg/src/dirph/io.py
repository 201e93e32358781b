"""File formats: dissimilarity matrices in, diagrams out.

Numeric literals are parsed exactly: ``1/3`` as a rational, ``0.25`` as
1/4 via its decimal expansion, never through binary floats.  In JSON output
rationals appear as plain integers when integral and as ``"p/q"`` strings
otherwise; death at infinity is ``null`` in JSON and ``inf`` in CSV.
"""

from __future__ import annotations

import csv
import io as _io
import json
from fractions import Fraction
from pathlib import Path

from .diagram import PersistenceDiagram
from .errors import FormatError
from .pipeline import DiagramSet
from .rips import DissimilarityMatrix


def parse_entry(text: str, where: str) -> Fraction:
    token = text.strip()
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"unparsable entry {token!r} at {where}") from None
    return value


def _matrix_from_rows(rows: list[list[Fraction]]) -> DissimilarityMatrix:
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise FormatError(f"matrix is not square: row {i + 1} has {len(row)} of {n} entries")
    return DissimilarityMatrix(tuple(tuple(row) for row in rows))


def _parse_matrix_csv(text: str) -> tuple[DissimilarityMatrix, list[str] | None]:
    raw_rows = [row for row in csv.reader(_io.StringIO(text)) if row and any(c.strip() for c in row)]
    if not raw_rows:
        raise FormatError("empty matrix file")
    labels: list[str] | None = None

    def numeric(cell: str) -> bool:
        try:
            Fraction(cell.strip())
        except (ValueError, ZeroDivisionError):
            return False
        return True

    # a header row is all labels; a row with one bad cell is a data error
    if not any(numeric(cell) for cell in raw_rows[0]):
        labels = [cell.strip() for cell in raw_rows[0]]
        raw_rows = raw_rows[1:]
    rows = [
        [parse_entry(cell, f"row {i + 1}, column {j + 1}") for j, cell in enumerate(row)]
        for i, row in enumerate(raw_rows)
    ]
    if not rows:
        raise FormatError("matrix file has a header but no rows")
    matrix = _matrix_from_rows(rows)
    if labels is not None and len(labels) != matrix.n:
        raise FormatError(f"{len(labels)} labels for a {matrix.n}-point matrix")
    return matrix, labels


def _parse_matrix_json(text: str) -> tuple[DissimilarityMatrix, list[str] | None]:
    try:
        payload = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, dict) or "d" not in payload:
        raise FormatError('matrix JSON must be an object with a "d" array')
    rows = []
    for i, row in enumerate(payload["d"]):
        parsed_row = []
        for j, cell in enumerate(row):
            where = f"row {i + 1}, column {j + 1}"
            if isinstance(cell, bool) or isinstance(cell, float):
                raise FormatError(f"non-exact entry at {where}")
            if isinstance(cell, (int, Fraction)):
                parsed_row.append(Fraction(cell))
            elif isinstance(cell, str):
                parsed_row.append(parse_entry(cell, where))
            else:
                raise FormatError(f"unparsable entry at {where}")
        rows.append(parsed_row)
    labels = payload.get("labels")
    matrix = _matrix_from_rows(rows)
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != matrix.n:
            raise FormatError("labels must list one name per point")
        labels = [str(x) for x in labels]
    return matrix, labels


def parse_matrix(path: str | Path) -> tuple[DissimilarityMatrix, list[str] | None]:
    """Read a dissimilarity matrix from a ``.csv`` or ``.json`` file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        return _parse_matrix_json(text)
    return _parse_matrix_csv(text)


def format_fraction(value: Fraction) -> int | str:
    return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def matrix_to_json(matrix: DissimilarityMatrix, labels: list[str] | None = None) -> str:
    payload: dict = {"d": [[format_fraction(x) for x in row] for row in matrix.d]}
    if labels is not None:
        payload["labels"] = labels
    return json.dumps(payload, indent=2)


def diagram_to_dict(dim: int, kind: str, diagram: PersistenceDiagram) -> dict:
    pairs = []
    multiplicities = []
    for (birth, death), m in diagram.points.items():
        pairs.append([format_fraction(birth), None if death is None else format_fraction(death)])
        multiplicities.append(m)
    return {"dim": dim, "kind": kind, "pairs": pairs, "multiplicities": multiplicities}


def diagrams_to_json(diagrams: DiagramSet) -> str:
    records = [
        diagram_to_dict(dim, "undirected", diagrams.undirected[dim])
        for dim in sorted(diagrams.undirected)
    ]
    records.extend(
        diagram_to_dict(dim, "directed", diagrams.directed[dim])
        for dim in sorted(diagrams.directed)
    )
    return json.dumps(records, indent=2)


def _fraction_from_json(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise FormatError(f"non-exact diagram coordinate {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_entry(value, "diagram coordinate")
    raise FormatError(f"unparsable diagram coordinate {value!r}")


def diagrams_from_json(text: str) -> list[tuple[int, str, PersistenceDiagram]]:
    try:
        records = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(records, list):
        raise FormatError("diagram JSON must be a list of records")
    out = []
    for record in records:
        pairs = record.get("pairs", [])
        multiplicities = record.get("multiplicities", [1] * len(pairs))
        if len(multiplicities) != len(pairs):
            raise FormatError("multiplicities must align with pairs")
        points: dict = {}
        for (raw_birth, raw_death), m in zip(pairs, multiplicities):
            birth = _fraction_from_json(raw_birth)
            death = None if raw_death is None else _fraction_from_json(raw_death)
            points[(birth, death)] = points.get((birth, death), 0) + int(m)
        out.append(
            (int(record["dim"]), str(record["kind"]), PersistenceDiagram(int(record["dim"]), points))
        )
    return out


def diagrams_to_csv(diagrams: DiagramSet) -> str:
    buffer = _io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["dim", "kind", "birth", "death", "multiplicity"])
    records = [
        (dim, "undirected", diagrams.undirected[dim]) for dim in sorted(diagrams.undirected)
    ] + [(dim, "directed", diagrams.directed[dim]) for dim in sorted(diagrams.directed)]
    for dim, kind, diagram in records:
        for (birth, death), m in diagram.points.items():
            writer.writerow(
                [dim, kind, format_fraction(birth), "inf" if death is None else format_fraction(death), m]
            )
    return buffer.getvalue()
