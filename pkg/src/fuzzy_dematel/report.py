"""Rendering analysis results into delimited text: CSV, markdown and JSON.

All table values are rounded half-away-from-zero at a configurable number of
decimals. Rendering is fully deterministic: fixed column orders, fixed key
orders, LF line endings.
"""
from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Iterable, Sequence, Union

from .engine import DematelResult, FuzzyMatrix
from .errors import DematelError

RELATION_SCALE_CANONICAL = "canonical"
RELATION_SCALE_TABLE5 = "paper-table5"
RELATION_SCALES = (RELATION_SCALE_CANONICAL, RELATION_SCALE_TABLE5)


def format_value(value: float, precision: int = 3) -> str:
    """Fixed-point string, rounded half-away-from-zero at ``precision`` decimals."""
    if precision < 0:
        raise DematelError(f"precision must be >= 0, got {precision}")
    quantum = Decimal(1).scaleb(-precision)
    rounded = Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP)
    if rounded == 0:
        rounded = abs(rounded)
    return f"{rounded:.{precision}f}"


def _format_triple(triple: Iterable[float], precision: int) -> str:
    return "(" + ", ".join(format_value(v, precision) for v in triple) + ")"


def relation_display(value: float, relation_scale: str) -> float:
    """Crisp net-relation value on the requested display scale.

    The canonical scale is the graded mean (l + 2m + u) / 4 of the relation
    triple; the 'paper-table5' scale is the plain sum l + 2m + u, exactly
    four times the canonical value.
    """
    if relation_scale == RELATION_SCALE_CANONICAL:
        return value
    if relation_scale == RELATION_SCALE_TABLE5:
        return value * 4.0
    raise DematelError(
        f"unknown relation scale {relation_scale!r}: expected one of {RELATION_SCALES}"
    )


def _csv_text(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _markdown_table(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "| " + " | ".join("---" for _ in header) + " |",
    ]
    for row in rows:
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def dr_rows(result: DematelResult, precision: int = 3) -> tuple[list[str], list[list[str]]]:
    """Dispatch/receive table: one row per criterion, fuzzy components plus crisp values."""
    header = [
        "code",
        "label",
        "dispatch_l",
        "dispatch_m",
        "dispatch_u",
        "receive_l",
        "receive_m",
        "receive_u",
        "dispatch",
        "receive",
    ]
    rows = []
    for item in result.criteria:
        rows.append(
            [item.code, item.label]
            + [format_value(v, precision) for v in item.dispatch_fuzzy]
            + [format_value(v, precision) for v in item.receive_fuzzy]
            + [format_value(item.dispatch, precision), format_value(item.receive, precision)]
        )
    return header, rows


def prominence_rows(
    result: DematelResult,
    precision: int = 3,
    relation_scale: str = RELATION_SCALE_CANONICAL,
) -> tuple[list[str], list[list[str]]]:
    """Prominence/relation table with category and rank columns."""
    header = [
        "code",
        "label",
        "prominence_l",
        "prominence_m",
        "prominence_u",
        "relation_l",
        "relation_m",
        "relation_u",
        "prominence",
        "relation",
        "category",
        "rank",
    ]
    rows = []
    for item in result.criteria:
        rows.append(
            [item.code, item.label]
            + [format_value(v, precision) for v in item.prominence_fuzzy]
            + [format_value(v, precision) for v in item.relation_triple]
            + [
                format_value(item.prominence, precision),
                format_value(relation_display(item.relation, relation_scale), precision),
                item.category,
                str(item.rank),
            ]
        )
    return header, rows


def crisp_total_rows(result: DematelResult, precision: int = 3) -> tuple[list[str], list[list[str]]]:
    header = ["code"] + list(result.codes)
    rows = []
    for i, code in enumerate(result.codes):
        rows.append([code] + [format_value(v, precision) for v in result.crisp_total[i]])
    return header, rows


def _dr_markdown(result: DematelResult, precision: int) -> str:
    header = ["Code", "Criterion", "Dispatch (fuzzy)", "Receive (fuzzy)", "Dispatch", "Receive"]
    rows = [
        [
            item.code,
            item.label,
            _format_triple(item.dispatch_fuzzy, precision),
            _format_triple(item.receive_fuzzy, precision),
            format_value(item.dispatch, precision),
            format_value(item.receive, precision),
        ]
        for item in result.criteria
    ]
    return "# Dispatch and receive\n\n" + _markdown_table(header, rows)


def _prominence_markdown(result: DematelResult, precision: int, relation_scale: str) -> str:
    header = [
        "Code",
        "Criterion",
        "Prominence (fuzzy)",
        "Relation (fuzzy)",
        "Prominence",
        "Relation",
        "Category",
        "Rank",
    ]
    rows = [
        [
            item.code,
            item.label,
            _format_triple(item.prominence_fuzzy, precision),
            _format_triple(item.relation_triple, precision),
            format_value(item.prominence, precision),
            format_value(relation_display(item.relation, relation_scale), precision),
            item.category,
            str(item.rank),
        ]
        for item in result.criteria
    ]
    lines = ["# Prominence and relation\n\n" + _markdown_table(header, rows)]
    lines.append(
        f"\nInfluence-map threshold: {format_value(result.threshold, precision)}; "
        f"edges: {len(result.edges)}.\n"
    )
    return "".join(lines)


def _crisp_total_markdown(result: DematelResult, precision: int) -> str:
    header, rows = crisp_total_rows(result, precision)
    return "# Crisp total-relation matrix\n\n" + _markdown_table(header, rows)


def _matrix_triples(matrix: FuzzyMatrix | None):
    return None if matrix is None else matrix.to_triples()


def result_to_dict(
    result: DematelResult,
    precision: int = 3,
    relation_scale: str = RELATION_SCALE_CANONICAL,
) -> dict:
    """Machine-readable mirror of the full result (values at full precision)."""
    return {
        "options": {"precision": precision, "relation_scale": relation_scale},
        "codes": list(result.codes),
        "labels": list(result.labels),
        "normalization_constant": result.normalization_constant,
        "threshold": result.threshold,
        "criteria": [
            {
                "code": item.code,
                "label": item.label,
                "dispatch_fuzzy": list(item.dispatch_fuzzy),
                "receive_fuzzy": list(item.receive_fuzzy),
                "dispatch": item.dispatch,
                "receive": item.receive,
                "prominence_fuzzy": list(item.prominence_fuzzy),
                "relation_fuzzy": list(item.relation_triple),
                "prominence": item.prominence,
                "relation": item.relation,
                "relation_display": relation_display(item.relation, relation_scale),
                "category": item.category,
                "rank": item.rank,
            }
            for item in result.criteria
        ],
        "matrices": {
            "aggregated": _matrix_triples(result.aggregated),
            "normalized": _matrix_triples(result.normalized),
            "total": result.total.to_triples(),
            "crisp_total": [[float(v) for v in row] for row in result.crisp_total],
        },
        "edges": [list(edge) for edge in result.edges],
    }


def result_json(
    result: DematelResult,
    precision: int = 3,
    relation_scale: str = RELATION_SCALE_CANONICAL,
) -> str:
    return json.dumps(result_to_dict(result, precision, relation_scale), indent=2) + "\n"


def analysis_documents(
    result: DematelResult,
    precision: int = 3,
    relation_scale: str = RELATION_SCALE_CANONICAL,
) -> dict[str, str]:
    """All delimited output documents keyed by file name."""
    dr_header, dr_table = dr_rows(result, precision)
    prom_header, prom_table = prominence_rows(result, precision, relation_scale)
    crisp_header, crisp_table = crisp_total_rows(result, precision)
    return {
        "dr_table.csv": _csv_text(dr_header, dr_table),
        "prominence_table.csv": _csv_text(prom_header, prom_table),
        "crisp_total.csv": _csv_text(crisp_header, crisp_table),
        "dr_table.md": _dr_markdown(result, precision),
        "prominence_table.md": _prominence_markdown(result, precision, relation_scale),
        "crisp_total.md": _crisp_total_markdown(result, precision),
        "result.json": result_json(result, precision, relation_scale),
    }


def write_text(path: Union[str, Path], text: str) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with p.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return p
