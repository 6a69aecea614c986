"""Graph-shaped exports: causal-diagram point data and the influence map as DOT."""
from __future__ import annotations

from .engine import DematelResult, NET_CAUSE
from .report import RELATION_SCALE_CANONICAL, format_value, relation_display, _csv_text


def causal_diagram_rows(
    result: DematelResult,
    precision: int = 3,
    relation_scale: str = RELATION_SCALE_CANONICAL,
) -> tuple[list[str], list[list[str]]]:
    """One (prominence, relation) point per criterion."""
    header = ["code", "prominence", "relation"]
    rows = [
        [
            item.code,
            format_value(item.prominence, precision),
            format_value(relation_display(item.relation, relation_scale), precision),
        ]
        for item in result.criteria
    ]
    return header, rows


def causal_diagram_csv(
    result: DematelResult,
    precision: int = 3,
    relation_scale: str = RELATION_SCALE_CANONICAL,
) -> str:
    header, rows = causal_diagram_rows(result, precision, relation_scale)
    return _csv_text(header, rows)


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(result: DematelResult) -> str:
    """Influence map as Graphviz DOT text.

    Nodes carry code plus label; net causes get a double border (peripheries=2)
    so the driving criteria stand out from the driven ones. Output order is
    deterministic: nodes in criteria order, edges row-major as computed.
    """
    lines = [
        "digraph influence_map {",
        "    rankdir=LR;",
        "    node [shape=ellipse];",
    ]
    for item in result.criteria:
        attrs = [f'label="{_dot_escape(item.code)}\\n{_dot_escape(item.label)}"']
        if item.category == NET_CAUSE:
            attrs.append("peripheries=2")
        lines.append(f'    "{_dot_escape(item.code)}" [{", ".join(attrs)}];')
    for src, dst in result.edges:
        lines.append(f'    "{_dot_escape(src)}" -> "{_dot_escape(dst)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
