"""Command-line entry points: analyze, export-graph, fixtures."""
from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import fixtures as fixture_store
from .engine import DematelResult, analyze_total_relation, run_pipeline
from .errors import DematelError
from .graphs import causal_diagram_csv, to_dot
from .report import (
    RELATION_SCALE_CANONICAL,
    RELATION_SCALES,
    analysis_documents,
    write_text,
)
from .survey import direct_matrices, load_survey_set

MODE_SURVEYS = "surveys"
MODE_FIXTURE = "fixture"

FORMATS = ("json", "csv", "markdown", "dot", "png")
DEFAULT_FORMATS = "json,csv,markdown"


@dataclass(frozen=True)
class RunOptions:
    """Validated options shared by the analyze and export-graph commands."""

    mode: str
    input_path: Path | None
    fixture: str | None
    threshold: float | None
    relation_scale: str
    precision: int
    out_dir: Path
    formats: tuple[str, ...]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzy-dematel",
        description=(
            "Turn multi-expert linguistic influence judgments into cause/effect "
            "classifications, prominence rankings and influence-map graphs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--input",
        type=Path,
        default=None,
        help="survey file (JSON) or directory of per-expert CSV files",
    )
    common.add_argument(
        "--mode",
        choices=(MODE_SURVEYS, MODE_FIXTURE),
        default=MODE_SURVEYS,
        help="start from expert surveys (default) or from a bundled total-relation fixture",
    )
    common.add_argument(
        "--fixture",
        default=None,
        help="bundled fixture name for --mode fixture (see the 'fixtures' command)",
    )
    common.add_argument(
        "--threshold",
        type=float,
        default=None,
        help="influence-map edge threshold (default: mean of all crisp total entries)",
    )
    common.add_argument(
        "--relation-scale",
        choices=RELATION_SCALES,
        default=RELATION_SCALE_CANONICAL,
        help="display scale of the crisp relation column (paper-table5 = 4x canonical)",
    )
    common.add_argument(
        "--precision",
        type=int,
        default=3,
        help="decimal places in emitted tables (half-away-from-zero rounding, default 3)",
    )
    common.add_argument("--out", type=Path, required=True, help="output directory")
    common.add_argument(
        "--formats",
        default=DEFAULT_FORMATS,
        help=f"comma-separated subset of {','.join(FORMATS)} (default {DEFAULT_FORMATS})",
    )

    sub.add_parser(
        "analyze",
        parents=[common],
        help="run the pipeline and write result tables",
    )
    sub.add_parser(
        "export-graph",
        parents=[common],
        help="write causal-diagram data, the influence map (DOT) and rendered figures",
    )
    sub.add_parser("fixtures", help="list bundled fixtures")
    return parser


def _parse_formats(raw: str) -> tuple[str, ...]:
    chosen = []
    for token in raw.split(","):
        token = token.strip().lower()
        if not token:
            continue
        if token not in FORMATS:
            raise DematelError(
                f"unknown output format {token!r}: expected a subset of {', '.join(FORMATS)}"
            )
        if token not in chosen:
            chosen.append(token)
    if not chosen:
        raise DematelError("at least one output format is required")
    return tuple(chosen)


def _options(args: argparse.Namespace) -> RunOptions:
    if args.precision < 0:
        raise DematelError(f"precision must be >= 0, got {args.precision}")
    if args.threshold is not None and not math.isfinite(args.threshold):
        raise DematelError(f"threshold must be finite, got {args.threshold}")
    if args.mode == MODE_FIXTURE:
        if not args.fixture:
            raise DematelError("--mode fixture requires --fixture <name>")
    elif args.input is None:
        raise DematelError("--mode surveys requires --input <path>")
    return RunOptions(
        mode=args.mode,
        input_path=args.input,
        fixture=args.fixture,
        threshold=args.threshold,
        relation_scale=args.relation_scale,
        precision=args.precision,
        out_dir=args.out,
        formats=_parse_formats(args.formats),
    )


def _compute_result(opts: RunOptions) -> DematelResult:
    if opts.mode == MODE_FIXTURE:
        fixture = fixture_store.load_fixture(opts.fixture)
        if not isinstance(fixture, fixture_store.MatrixFixture):
            raise DematelError(
                f"fixture {opts.fixture!r} is not a total-relation matrix; "
                "fixture mode needs one (try table2-total-relation)"
            )
        return analyze_total_relation(
            fixture.matrix,
            codes=fixture.codes,
            labels=fixture.labels,
            threshold=opts.threshold,
        )
    surveys = load_survey_set(opts.input_path)
    return run_pipeline(
        direct_matrices(surveys),
        codes=surveys.codes,
        labels=surveys.labels,
        threshold=opts.threshold,
    )


def _write_figures(result: DematelResult, opts: RunOptions) -> list[Path]:
    # matplotlib import is deferred so text-only runs stay light
    from . import figures

    return [
        figures.save_causal_diagram(
            result, opts.out_dir / "causal_diagram.png", relation_scale=opts.relation_scale
        ),
        figures.save_influence_map(result, opts.out_dir / "influence_map.png"),
    ]


def cmd_analyze(opts: RunOptions) -> int:
    result = _compute_result(opts)
    documents = analysis_documents(result, opts.precision, opts.relation_scale)
    written: list[Path] = []
    for name, text in documents.items():
        suffix = name.rsplit(".", 1)[1]
        wanted = {"csv": "csv", "md": "markdown", "json": "json"}[suffix]
        if wanted in opts.formats:
            written.append(write_text(opts.out_dir / name, text))
    if "dot" in opts.formats:
        written.append(write_text(opts.out_dir / "influence_map.dot", to_dot(result)))
    if "png" in opts.formats:
        written.extend(_write_figures(result, opts))
    for path in written:
        print(f"wrote {path}")
    return 0


def cmd_export_graph(opts: RunOptions) -> int:
    result = _compute_result(opts)
    written = [
        write_text(
            opts.out_dir / "causal_diagram.csv",
            causal_diagram_csv(result, opts.precision, opts.relation_scale),
        ),
        write_text(opts.out_dir / "influence_map.dot", to_dot(result)),
    ]
    written.extend(_write_figures(result, opts))
    for path in written:
        print(f"wrote {path}")
    return 0


def cmd_fixtures() -> int:
    for name, summary in fixture_store.list_fixtures():
        print(f"{name} {summary}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "fixtures":
            return cmd_fixtures()
        opts = _options(args)
        if args.command == "analyze":
            return cmd_analyze(opts)
        return cmd_export_graph(opts)
    except DematelError as err:
        stage = getattr(err, "stage", None)
        prefix = f"error at stage {stage!r}" if stage else "error"
        print(f"{prefix}: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"i/o error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
