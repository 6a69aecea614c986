"""Command-line interface: subcommands, outputs, exit codes, determinism."""

from __future__ import annotations

import csv
import io
import json

import pytest

from fuzzy_dematel import bundled_survey_path
from fuzzy_dematel.cli import main

from conftest import GOLDEN_DIR

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"
SURVEY = str(bundled_survey_path("supplier_3x2"))

ANALYZE_GOLDEN = GOLDEN_DIR / "supplier_3x2"
GRAPH_GOLDEN = GOLDEN_DIR / "table2_graph"


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFixturesCommand:
    def test_lists_all_fixtures(self, capsys):
        code, out, err = run(["fixtures"], capsys)
        assert code == 0
        assert err == ""
        lines = out.strip().splitlines()
        assert len(lines) == 6
        assert lines[0].startswith("table2-total-relation 5×5 fuzzy")
        assert any(line.startswith("table6-sub-dr 15 criteria") for line in lines)

    def test_listing_is_stable(self, capsys):
        _, first, _ = run(["fixtures"], capsys)
        _, second, _ = run(["fixtures"], capsys)
        assert first == second


class TestAnalyze:
    def test_default_run_matches_golden_files(self, tmp_path, capsys):
        out_dir = tmp_path / "out"
        code, out, err = run(
            ["analyze", "--input", SURVEY, "--out", str(out_dir)], capsys
        )
        assert code == 0
        assert err == ""
        golden_files = sorted(p.name for p in ANALYZE_GOLDEN.iterdir())
        assert sorted(p.name for p in out_dir.iterdir()) == golden_files
        for name in golden_files:
            assert (out_dir / name).read_bytes() == (
                ANALYZE_GOLDEN / name
            ).read_bytes(), name
        assert out.count("wrote ") == len(golden_files)

    def test_runs_are_byte_identical(self, tmp_path, capsys):
        first = tmp_path / "first"
        second = tmp_path / "second"
        run(["analyze", "--input", SURVEY, "--out", str(first)], capsys)
        run(["analyze", "--input", SURVEY, "--out", str(second)], capsys)
        for path in first.iterdir():
            assert path.read_bytes() == (second / path.name).read_bytes()

    def test_csv_directory_input(self, tmp_path, capsys):
        surveys = tmp_path / "surveys"
        surveys.mkdir()
        (surveys / "e1.csv").write_text(
            "code,A,B\nA,NI,MI\nB,HI,NI\n", encoding="utf-8"
        )
        out_dir = tmp_path / "out"
        code, _, _ = run(
            ["analyze", "--input", str(surveys), "--out", str(out_dir)], capsys
        )
        assert code == 0
        payload = json.loads((out_dir / "result.json").read_text())
        assert payload["codes"] == ["A", "B"]

    def test_fixture_mode_with_published_relation_scale(self, tmp_path, capsys, table5):
        out_dir = tmp_path / "out"
        code, _, _ = run(
            [
                "analyze",
                "--mode",
                "fixture",
                "--fixture",
                "table2-total-relation",
                "--relation-scale",
                "paper-table5",
                "--formats",
                "csv",
                "--out",
                str(out_dir),
            ],
            capsys,
        )
        assert code == 0
        text = (out_dir / "prominence_table.csv").read_text()
        header, *rows = list(csv.reader(io.StringIO(text)))
        rel = header.index("relation")
        for i, row in enumerate(rows):
            assert float(row[rel]) == pytest.approx(
                table5.relation_crisp[i], abs=0.004 + 1e-9
            )

    def test_format_selection_json_only(self, tmp_path, capsys):
        out_dir = tmp_path / "out"
        code, _, _ = run(
            ["analyze", "--input", SURVEY, "--formats", "json", "--out", str(out_dir)],
            capsys,
        )
        assert code == 0
        assert [p.name for p in out_dir.iterdir()] == ["result.json"]

    def test_dot_format_is_opt_in(self, tmp_path, capsys):
        out_dir = tmp_path / "out"
        run(
            [
                "analyze",
                "--mode",
                "fixture",
                "--fixture",
                "table2-total-relation",
                "--formats",
                "dot",
                "--out",
                str(out_dir),
            ],
            capsys,
        )
        assert (out_dir / "influence_map.dot").read_bytes() == (
            GRAPH_GOLDEN / "influence_map.dot"
        ).read_bytes()

    def test_png_format_renders_figures(self, tmp_path, capsys):
        out_dir = tmp_path / "out"
        code, _, _ = run(
            ["analyze", "--input", SURVEY, "--formats", "png", "--out", str(out_dir)],
            capsys,
        )
        assert code == 0
        for name in ("causal_diagram.png", "influence_map.png"):
            assert (out_dir / name).read_bytes()[:8] == PNG_MAGIC

    def test_threshold_override_removes_edges(self, tmp_path, capsys):
        out_dir = tmp_path / "out"
        run(
            [
                "analyze",
                "--input",
                SURVEY,
                "--threshold",
                "999",
                "--formats",
                "json,dot",
                "--out",
                str(out_dir),
            ],
            capsys,
        )
        payload = json.loads((out_dir / "result.json").read_text())
        assert payload["edges"] == []
        assert "->" not in (out_dir / "influence_map.dot").read_text()

    def test_precision_flag(self, tmp_path, capsys):
        out_dir = tmp_path / "out"
        run(
            [
                "analyze",
                "--input",
                SURVEY,
                "--precision",
                "1",
                "--formats",
                "csv",
                "--out",
                str(out_dir),
            ],
            capsys,
        )
        text = (out_dir / "dr_table.csv").read_text()
        row = text.splitlines()[1].split(",")
        assert row[2] == "0.9"  # one decimal everywhere


class TestExportGraph:
    def test_writes_graph_files_and_figures(self, tmp_path, capsys):
        out_dir = tmp_path / "out"
        code, out, _ = run(
            [
                "export-graph",
                "--mode",
                "fixture",
                "--fixture",
                "table2-total-relation",
                "--out",
                str(out_dir),
            ],
            capsys,
        )
        assert code == 0
        assert (out_dir / "causal_diagram.csv").read_bytes() == (
            GRAPH_GOLDEN / "causal_diagram.csv"
        ).read_bytes()
        assert (out_dir / "influence_map.dot").read_bytes() == (
            GRAPH_GOLDEN / "influence_map.dot"
        ).read_bytes()
        for name in ("causal_diagram.png", "influence_map.png"):
            assert (out_dir / name).read_bytes()[:8] == PNG_MAGIC
        assert out.count("wrote ") == 4

    def test_survey_input_also_works(self, tmp_path, capsys):
        out_dir = tmp_path / "out"
        code, _, _ = run(
            ["export-graph", "--input", SURVEY, "--out", str(out_dir)], capsys
        )
        assert code == 0
        header = (out_dir / "causal_diagram.csv").read_text().splitlines()[0]
        assert header == "code,prominence,relation"


class TestFailureModes:
    def test_unknown_format(self, tmp_path, capsys):
        code, _, err = run(
            [
                "analyze",
                "--input",
                SURVEY,
                "--formats",
                "yaml",
                "--out",
                str(tmp_path),
            ],
            capsys,
        )
        assert code == 1
        assert "unknown output format 'yaml'" in err

    def test_empty_format_list(self, tmp_path, capsys):
        code, _, err = run(
            ["analyze", "--input", SURVEY, "--formats", ",", "--out", str(tmp_path)],
            capsys,
        )
        assert code == 1
        assert "at least one output format" in err

    def test_fixture_mode_requires_fixture_name(self, tmp_path, capsys):
        code, _, err = run(
            ["analyze", "--mode", "fixture", "--out", str(tmp_path)], capsys
        )
        assert code == 1
        assert "--fixture" in err

    def test_surveys_mode_requires_input(self, tmp_path, capsys):
        code, _, err = run(["analyze", "--out", str(tmp_path)], capsys)
        assert code == 1
        assert "--input" in err

    def test_unknown_fixture_name(self, tmp_path, capsys):
        code, _, err = run(
            [
                "analyze",
                "--mode",
                "fixture",
                "--fixture",
                "table99",
                "--out",
                str(tmp_path),
            ],
            capsys,
        )
        assert code == 1
        assert "unknown fixture" in err

    def test_vector_fixture_rejected_for_analysis(self, tmp_path, capsys):
        code, _, err = run(
            [
                "analyze",
                "--mode",
                "fixture",
                "--fixture",
                "table6-sub-dr",
                "--out",
                str(tmp_path),
            ],
            capsys,
        )
        assert code == 1
        assert "not a total-relation matrix" in err

    def test_negative_precision(self, tmp_path, capsys):
        code, _, err = run(
            [
                "analyze",
                "--input",
                SURVEY,
                "--precision",
                "-2",
                "--out",
                str(tmp_path),
            ],
            capsys,
        )
        assert code == 1
        assert "precision" in err

    def test_non_finite_threshold(self, tmp_path, capsys):
        code, _, err = run(
            [
                "analyze",
                "--input",
                SURVEY,
                "--threshold",
                "inf",
                "--out",
                str(tmp_path),
            ],
            capsys,
        )
        assert code == 1
        assert "finite" in err

    def test_malformed_survey_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("", encoding="utf-8")
        code, _, err = run(
            ["analyze", "--input", str(bad), "--out", str(tmp_path / "out")], capsys
        )
        assert code == 1
        assert err.startswith("error")
        assert "not valid JSON" in err

    def test_degenerate_survey_reports_stage(self, tmp_path, capsys):
        doc = {
            "criteria": [{"code": "A"}, {"code": "B"}],
            "level": "main",
            "experts": [{"id": "E1", "matrix": [["NI", "NI"], ["NI", "NI"]]}],
        }
        path = tmp_path / "zeros.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        code, _, err = run(
            ["analyze", "--input", str(path), "--out", str(tmp_path / "out")], capsys
        )
        assert code == 1
        assert err.startswith("error at stage 'normalize':")

    def test_missing_input_file_is_io_error(self, tmp_path, capsys):
        code, _, err = run(
            [
                "analyze",
                "--input",
                str(tmp_path / "absent.json"),
                "--out",
                str(tmp_path / "out"),
            ],
            capsys,
        )
        assert code == 2
        assert err.startswith("i/o error:")

    def test_argparse_rejects_bad_choice(self, tmp_path, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["analyze", "--mode", "bogus", "--out", str(tmp_path)])
        assert excinfo.value.code == 2
