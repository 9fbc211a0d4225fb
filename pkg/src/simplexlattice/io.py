"""File formats, report serialization, and the k=3 SVG renderer.

Every writer returns bytes and is deterministic: identical inputs give
byte-identical output.  Labeling files carry an explicit rule descriptor in
the header so an externally stored labeling stays traceable when it is
verified later.
"""

from __future__ import annotations

import csv
import io as _io
import json

from ._version import __version__ as TOOL_VERSION
from .labeling import Labeling
from .lattice import Params, Point, enumerate_vertices, is_lattice_point
from .oracle import OracleResult
from .verify import VerificationReport

FORMATS = ("json", "csv")

# Fixed fill palette keyed by color value, for k=3 renders.
PALETTE = {1: "#e41a1c", 2: "#377eb8", 3: "#4daf4a"}


class LabelingFormatError(ValueError):
    """Malformed labeling file.  ``row`` locates the offending entry:
    the file line for CSV, the 1-based index into ``labels`` for JSON."""

    def __init__(self, message: str, row: int | None = None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


class UnsupportedDimension(ValueError):
    pass


def _labeling_dict(labeling: Labeling) -> dict:
    params = labeling.params
    rows = [
        {"v": list(v), "color": c}
        for v, c in zip(enumerate_vertices(params), labeling.colors)
    ]
    return {
        "k": params.k,
        "q": params.q,
        "rule": labeling.rule,
        "version": TOOL_VERSION,
        "labels": rows,
    }


def write_labeling(labeling: Labeling, format: str = "json") -> bytes:
    """Serialize a labeling, rows in vertex-rank order.

    JSON is one object with the header fields inline; CSV carries the
    header as ``# key: value`` comment lines above the column row.
    """
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
    if format == "json":
        return (json.dumps(_labeling_dict(labeling), indent=2) + "\n").encode()

    params = labeling.params
    buf = _io.StringIO()
    buf.write("# simplexlattice labeling\n")
    buf.write(f"# version: {TOOL_VERSION}\n")
    buf.write(f"# k: {params.k}\n")
    buf.write(f"# q: {params.q}\n")
    buf.write(f"# rule: {labeling.rule}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"v{i}" for i in range(1, params.k)] + ["color"])
    for v, c in zip(enumerate_vertices(params), labeling.colors):
        writer.writerow(list(v) + [c])
    return buf.getvalue().encode()


def _parse_header(fields: dict[str, str]) -> tuple[Params, str]:
    for key in ("k", "q", "rule"):
        if key not in fields:
            raise LabelingFormatError(f"header is missing {key!r}")
    try:
        params = Params(int(fields["k"]), int(fields["q"]))
    except ValueError as exc:
        raise LabelingFormatError(f"bad header: {exc}") from exc
    return params, fields["rule"]


def _check_rows(rows: list[tuple[Point, int, int]], params: Params,
                end_row: int) -> tuple[int, ...]:
    """Validate (vertex, color, row number) triples against V_{k,q}.

    Rows must be complete and in vertex-rank order; colors in [1, k].
    """
    expected = enumerate_vertices(params)
    if len(rows) != len(expected):
        row = rows[len(expected)][2] if len(rows) > len(expected) else end_row
        raise LabelingFormatError(
            f"wrong row count: expected {len(expected)} vertices, got {len(rows)}",
            row,
        )
    seen: set[Point] = set()
    colors = []
    for (v, c, row), want in zip(rows, expected):
        if not 1 <= c <= params.k:
            raise LabelingFormatError(
                f"color out of range: {c} not in 1..{params.k}", row
            )
        if v != want:
            if v in seen:
                raise LabelingFormatError(f"duplicate vertex {v}", row)
            if not is_lattice_point(v, params):
                raise LabelingFormatError(
                    f"{v} is not a point of V_{{{params.k},{params.q}}}", row
                )
            raise LabelingFormatError(
                f"vertex {v} out of rank order (expected {want})", row
            )
        seen.add(v)
        colors.append(c)
    return tuple(colors)


def _read_json(text: str) -> Labeling:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LabelingFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("labels"), list):
        raise LabelingFormatError("expected an object with a 'labels' array")
    params, rule = _parse_header(
        {k: str(data[k]) for k in ("k", "q", "rule") if k in data}
    )
    rows = []
    for i, entry in enumerate(data["labels"], start=1):
        if (
            not isinstance(entry, dict)
            or not isinstance(entry.get("v"), list)
            or not all(isinstance(x, int) for x in entry["v"])
            or not isinstance(entry.get("color"), int)
            or len(entry["v"]) != params.k - 1
        ):
            raise LabelingFormatError(
                f"malformed row: expected {{'v': [{params.k - 1} ints], 'color': int}}",
                i,
            )
        rows.append((tuple(entry["v"]), entry["color"], i))
    colors = _check_rows(rows, params, len(rows) + 1)
    return Labeling(params, colors, rule)


def _read_csv(text: str) -> Labeling:
    header_fields: dict[str, str] = {}
    rows = []
    params = None
    lines = text.splitlines()
    data_starts = None
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            if data_starts is not None:
                raise LabelingFormatError("comment after data rows", lineno)
            key, sep, value = line.lstrip("#").partition(":")
            if sep:
                header_fields[key.strip()] = value.strip()
            continue
        if data_starts is None:
            params, rule = _parse_header(header_fields)
            want = [f"v{i}" for i in range(1, params.k)] + ["color"]
            got = next(csv.reader([line]))
            if got != want:
                raise LabelingFormatError(
                    f"bad column header: expected {','.join(want)}", lineno
                )
            data_starts = lineno
            continue
        cells = next(csv.reader([line]))
        if len(cells) != params.k:
            raise LabelingFormatError(
                f"malformed row: expected {params.k} columns, got {len(cells)}",
                lineno,
            )
        try:
            numbers = [int(x) for x in cells]
        except ValueError:
            raise LabelingFormatError(
                f"malformed row: non-integer entry in {cells}", lineno
            ) from None
        rows.append((tuple(numbers[:-1]), numbers[-1], lineno))
    if data_starts is None:
        params, rule = _parse_header(header_fields)
        raise LabelingFormatError("missing column header row")
    colors = _check_rows(rows, params, len(lines) + 1)
    return Labeling(params, colors, rule)


def read_labeling(data: bytes) -> Labeling:
    """Parse a labeling file written by :func:`write_labeling`.

    The format is sniffed: JSON when the first byte is ``{``, CSV
    otherwise.  Raises LabelingFormatError with the offending row number
    for malformed rows, wrong row counts, out-of-range colors, and
    duplicate vertices.
    """
    text = data.decode("utf-8")
    if text.lstrip()[:1] == "{":
        return _read_json(text)
    return _read_csv(text)


def report_to_dict(report: VerificationReport, max_violations: int = 100) -> dict:
    """JSON-ready view of a report.  Violation lists are truncated to
    ``max_violations`` entries; the ``*_count`` fields stay exact."""
    out = {
        "k": report.params.k,
        "q": report.params.q,
        "labeling_rule": report.labeling_rule,
        "edge_rule": report.edge_rule,
        "threshold": report.threshold,
        "sperner_ok": report.sperner_ok,
        "sperner_violation_count": (
            None if report.sperner_ok is None else len(report.sperner_violations)
        ),
        "sperner_violations": [
            {"v": list(v), "color": c}
            for v, c in report.sperner_violations[:max_violations]
        ],
        "edges_checked": report.edges_checked,
        "max_colors_per_edge": report.max_colors_per_edge,
        "histogram": (
            None
            if report.histogram is None
            else {str(n): count for n, count in sorted(report.histogram.items())}
        ),
        "violating_edge_count": (
            None if report.edges_checked is None else len(report.violating_edges)
        ),
        "violating_edges": [
            {"base": list(base), "pi": list(pi), "colors": list(colors)}
            for base, pi, colors in report.violating_edges[:max_violations]
        ],
        "passed": report.passed,
    }
    if report.inconsistent_cells_checked is not None:
        out["inconsistent_cells_checked"] = report.inconsistent_cells_checked
        out["inconsistent_histogram"] = {
            str(n): count
            for n, count in sorted(report.inconsistent_histogram.items())
        }
        out["inconsistent_max_colors"] = report.inconsistent_max_colors
    return out


def write_report(report: VerificationReport, max_violations: int = 100) -> bytes:
    return (json.dumps(report_to_dict(report, max_violations), indent=2) + "\n").encode()


def oracle_result_to_dict(result: OracleResult) -> dict:
    return {
        "k": result.params.k,
        "q": result.params.q,
        "edge_rule": result.edge_rule,
        "min_max_colors": result.min_max_colors,
        "exhausted": result.exhausted,
        "nodes_explored": result.nodes_explored,
        "witness": (
            None if result.witness is None else _labeling_dict(result.witness)
        ),
    }


def write_oracle_result(result: OracleResult) -> bytes:
    return (json.dumps(oracle_result_to_dict(result), indent=2) + "\n").encode()


def render_svg(labeling: Labeling) -> bytes:
    """Draw the colored triangulation for k=3.

    The dilated simplex is already the planar triangle with corners
    (0,0), (0,q), (q,q), so points are placed at raw (v1, v2).  Facets
    become outlined triangles, vertices circles filled by PALETTE.
    """
    from .lattice import enumerate_facets, pi_hyperedge

    params = labeling.params
    if params.k != 3:
        raise UnsupportedDimension(f"rendering needs k=3, got k={params.k}")

    size, margin = 480.0, 40.0
    scale = (size - 2 * margin) / max(params.q, 1)

    def place(v: Point) -> tuple[str, str]:
        x = margin + v[0] * scale
        y = size - margin - v[1] * scale
        return f"{x:.1f}", f"{y:.1f}"

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size:.0f}" height="{size:.0f}" '
        f'viewBox="0 0 {size:.0f} {size:.0f}">',
    ]
    if params.q >= 1:
        for v, pi in enumerate_facets(params):
            cell = pi_hyperedge(v, pi, params)
            points = " ".join(",".join(place(u)) for u in cell.vertices)
            parts.append(
                f'  <polygon points="{points}" fill="none" '
                f'stroke="#888888" stroke-width="1"/>'
            )
    radius = min(6.0, scale * 0.3)
    for v, c in zip(enumerate_vertices(params), labeling.colors):
        x, y = place(v)
        parts.append(
            f'  <circle cx="{x}" cy="{y}" r="{radius:.1f}" '
            f'fill="{PALETTE[c]}" stroke="#333333" stroke-width="1"/>'
        )
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode()
