"""Survey documents: criteria models, expert judgment grids, parsing, validation.

The JSON document format::

    {
      "criteria": [{"code": "C1", "label": "Quality", "parent": null}, ...],
      "level": "main",
      "experts": [{"id": "E1", "matrix": [["NI", "HI"], [5, "NI"]]}, ...]
    }

Judgment cells hold either scale tokens or integer levels 0..10; integers are
the canonical encoding and are what the serializer emits. A CSV variant is
also accepted: a directory with one file per expert, where the first row and
first column carry the criterion codes.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, Union

from .engine import FuzzyMatrix, KIND_DIRECT
from .errors import (
    DiagonalViolationError,
    DimensionError,
    SurveyFormatError,
    UnknownTermError,
)
from .tfn import INFLUENCE_SCALE, LinguisticScale

LEVEL_MAIN = "main"
LEVEL_SUB = "sub"
_LEVELS = (LEVEL_MAIN, LEVEL_SUB)


@dataclass(frozen=True)
class Criterion:
    code: str
    label: str
    parent: str | None = None


@dataclass(frozen=True)
class CriteriaModel:
    """Two-tier criteria hierarchy: top-level criteria plus optional sub-criteria."""

    criteria: tuple[Criterion, ...]

    def __post_init__(self) -> None:
        codes = [c.code for c in self.criteria]
        if len(set(codes)) != len(codes):
            dupes = sorted({c for c in codes if codes.count(c) > 1})
            raise SurveyFormatError(f"duplicate criterion codes: {', '.join(dupes)}")
        known = set(codes)
        for c in self.criteria:
            if c.parent is not None and c.parent not in known:
                raise SurveyFormatError(
                    f"criterion {c.code!r} names unknown parent {c.parent!r}"
                )

    def mains(self) -> tuple[Criterion, ...]:
        return tuple(c for c in self.criteria if c.parent is None)

    def subs(self) -> tuple[Criterion, ...]:
        return tuple(c for c in self.criteria if c.parent is not None)

    def at_level(self, level: str) -> tuple[Criterion, ...]:
        if level == LEVEL_MAIN:
            return self.mains()
        if level == LEVEL_SUB:
            return self.subs()
        raise SurveyFormatError(f"unknown criteria level {level!r}: expected 'main' or 'sub'")


@dataclass(frozen=True)
class ExpertSurvey:
    """One expert's judgment grid, stored as canonical integer levels."""

    id: str
    levels: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ExpertSurveySet:
    """A criteria model, the level being judged, and one grid per expert."""

    model: CriteriaModel
    level: str
    experts: tuple[ExpertSurvey, ...]

    @property
    def criteria(self) -> tuple[Criterion, ...]:
        return self.model.at_level(self.level)

    @property
    def codes(self) -> tuple[str, ...]:
        return tuple(c.code for c in self.criteria)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.criteria)


def _parse_cell(raw, scale: LinguisticScale, where: str) -> int:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise SurveyFormatError(f"{where}: judgment must be a token or integer level, got {raw!r}")
    try:
        return scale.entry(raw).level
    except UnknownTermError as err:
        raise UnknownTermError(f"{where}: {err}") from err


def _parse_grid(
    raw_matrix, codes: Sequence[str], expert_id: str, scale: LinguisticScale
) -> tuple[tuple[int, ...], ...]:
    n = len(codes)
    if not isinstance(raw_matrix, list) or len(raw_matrix) != n:
        raise DimensionError(
            f"expert {expert_id!r}: matrix must have {n} rows, got "
            f"{len(raw_matrix) if isinstance(raw_matrix, list) else type(raw_matrix).__name__}"
        )
    rows = []
    for i, raw_row in enumerate(raw_matrix):
        if not isinstance(raw_row, list) or len(raw_row) != n:
            raise DimensionError(f"expert {expert_id!r}: row {i} must have {n} cells")
        row = []
        for j, raw in enumerate(raw_row):
            level = _parse_cell(raw, scale, f"expert {expert_id!r}, cell ({codes[i]}, {codes[j]})")
            if i == j and level != 0:
                raise DiagonalViolationError(
                    f"expert {expert_id!r}: self-influence cell ({codes[i]}, {codes[j]}) "
                    f"must be the zero judgment, got level {level}"
                )
            row.append(level)
        rows.append(tuple(row))
    return tuple(rows)


def survey_set_from_dict(doc: dict, scale: LinguisticScale = INFLUENCE_SCALE) -> ExpertSurveySet:
    if not isinstance(doc, dict):
        raise SurveyFormatError(f"survey document must be an object, got {type(doc).__name__}")
    for key in ("criteria", "level", "experts"):
        if key not in doc:
            raise SurveyFormatError(f"survey document is missing the {key!r} field")
    raw_criteria = doc["criteria"]
    if not isinstance(raw_criteria, list) or not raw_criteria:
        raise SurveyFormatError("'criteria' must be a non-empty array")
    criteria = []
    for idx, raw in enumerate(raw_criteria):
        if not isinstance(raw, dict) or "code" not in raw:
            raise SurveyFormatError(f"criteria[{idx}] must be an object with a 'code'")
        criteria.append(
            Criterion(
                code=str(raw["code"]),
                label=str(raw.get("label", raw["code"])),
                parent=None if raw.get("parent") is None else str(raw["parent"]),
            )
        )
    model = CriteriaModel(criteria=tuple(criteria))
    level = doc["level"]
    if level not in _LEVELS:
        raise SurveyFormatError(f"'level' must be 'main' or 'sub', got {level!r}")
    codes = tuple(c.code for c in model.at_level(level))
    if not codes:
        raise SurveyFormatError(f"criteria model has no entries at level {level!r}")
    raw_experts = doc["experts"]
    if not isinstance(raw_experts, list) or not raw_experts:
        raise SurveyFormatError("'experts' must be a non-empty array")
    experts = []
    seen_ids = set()
    for idx, raw in enumerate(raw_experts):
        if not isinstance(raw, dict) or "matrix" not in raw:
            raise SurveyFormatError(f"experts[{idx}] must be an object with a 'matrix'")
        expert_id = str(raw.get("id", f"E{idx + 1}"))
        if expert_id in seen_ids:
            raise SurveyFormatError(f"duplicate expert id {expert_id!r}")
        seen_ids.add(expert_id)
        experts.append(
            ExpertSurvey(id=expert_id, levels=_parse_grid(raw["matrix"], codes, expert_id, scale))
        )
    return ExpertSurveySet(model=model, level=level, experts=tuple(experts))


def parse_survey_set(text: str, scale: LinguisticScale = INFLUENCE_SCALE) -> ExpertSurveySet:
    """Parse a JSON survey document; malformed input raises SurveyFormatError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SurveyFormatError(f"survey document is not valid JSON: {err}") from err
    return survey_set_from_dict(doc, scale=scale)


def survey_set_to_dict(surveys: ExpertSurveySet) -> dict:
    return {
        "criteria": [
            {"code": c.code, "label": c.label, "parent": c.parent} for c in surveys.model.criteria
        ],
        "level": surveys.level,
        "experts": [
            {"id": e.id, "matrix": [list(row) for row in e.levels]} for e in surveys.experts
        ],
    }


def serialize_survey_set(surveys: ExpertSurveySet) -> str:
    """Emit the canonical JSON encoding (integer judgment levels, 2-space indent)."""
    return json.dumps(survey_set_to_dict(surveys), indent=2) + "\n"


def validate_survey_set(
    surveys: ExpertSurveySet, scale: LinguisticScale = INFLUENCE_SCALE
) -> list[str]:
    """Re-check every structural invariant; returns a list of violations (empty = valid)."""
    violations: list[str] = []
    try:
        criteria = surveys.model.at_level(surveys.level)
    except SurveyFormatError as err:
        return [str(err)]
    n = len(criteria)
    if n == 0:
        violations.append(f"criteria model has no entries at level {surveys.level!r}")
    if not surveys.experts:
        violations.append("survey set has no experts")
    for expert in surveys.experts:
        grid = expert.levels
        if len(grid) != n:
            violations.append(
                f"expert {expert.id!r}: level mismatch, grid has {len(grid)} rows "
                f"but level {surveys.level!r} has {n} criteria"
            )
            continue
        for i, row in enumerate(grid):
            if len(row) != n:
                violations.append(f"expert {expert.id!r}: row {i} has {len(row)} cells, expected {n}")
                continue
            for j, level in enumerate(row):
                if not isinstance(level, int) or isinstance(level, bool) or not (
                    0 <= level <= scale.max_level
                ):
                    violations.append(
                        f"expert {expert.id!r}: cell ({i}, {j}) holds invalid level {level!r}"
                    )
                elif i == j and level != 0:
                    violations.append(
                        f"expert {expert.id!r}: self-influence cell ({i}, {i}) must be 0, got {level}"
                    )
    return violations


def direct_matrices(
    surveys: ExpertSurveySet, scale: LinguisticScale = INFLUENCE_SCALE
) -> list[FuzzyMatrix]:
    """Fuzzify every expert grid into a direct-relation matrix."""
    matrices = []
    for expert in surveys.experts:
        triples = [[scale.fuzzify(level).as_tuple() for level in row] for row in expert.levels]
        matrices.append(FuzzyMatrix.from_triples(triples, kind=KIND_DIRECT))
    return matrices


def _read_expert_csv(path: Path, scale: LinguisticScale) -> tuple[str, tuple[str, ...], tuple[tuple[int, ...], ...]]:
    with path.open(newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh) if row]
    if not rows:
        raise SurveyFormatError(f"{path.name}: file is empty")
    header = [cell.strip() for cell in rows[0]]
    if len(header) < 2:
        raise SurveyFormatError(f"{path.name}: header row must list the criterion codes")
    codes = tuple(header[1:])
    n = len(codes)
    if len(rows) != n + 1:
        raise DimensionError(f"{path.name}: expected {n} data rows, got {len(rows) - 1}")
    expert_id = path.stem
    grid = []
    for i, raw_row in enumerate(rows[1:]):
        cells = [cell.strip() for cell in raw_row]
        if len(cells) != n + 1:
            raise DimensionError(f"{path.name}: row {i + 1} has {len(cells)} cells, expected {n + 1}")
        if cells[0] != codes[i]:
            raise SurveyFormatError(
                f"{path.name}: row {i + 1} is labeled {cells[0]!r}, expected {codes[i]!r}"
            )
        row = []
        for j, raw in enumerate(cells[1:]):
            key: Union[str, int] = int(raw) if raw.lstrip("+-").isdigit() else raw
            level = _parse_cell(key, scale, f"{path.name}, cell ({codes[i]}, {codes[j]})")
            if i == j and level != 0:
                raise DiagonalViolationError(
                    f"{path.name}: self-influence cell ({codes[i]}, {codes[j]}) must be the "
                    f"zero judgment, got level {level}"
                )
            row.append(level)
        grid.append(tuple(row))
    return expert_id, codes, tuple(grid)


def load_survey_set(path: Union[str, Path], scale: LinguisticScale = INFLUENCE_SCALE) -> ExpertSurveySet:
    """Load surveys from a JSON file or from a directory of per-expert CSV files."""
    p = Path(path)
    if p.is_dir():
        files = sorted(p.glob("*.csv"))
        if not files:
            raise SurveyFormatError(f"{p}: directory holds no .csv survey files")
        experts = []
        codes: tuple[str, ...] | None = None
        for f in files:
            expert_id, file_codes, grid = _read_expert_csv(f, scale)
            if codes is None:
                codes = file_codes
            elif file_codes != codes:
                raise SurveyFormatError(
                    f"{f.name}: criterion codes {list(file_codes)} differ from "
                    f"{list(codes)} in the first file"
                )
            experts.append(ExpertSurvey(id=expert_id, levels=grid))
        assert codes is not None
        model = CriteriaModel(criteria=tuple(Criterion(code=c, label=c) for c in codes))
        return ExpertSurveySet(model=model, level=LEVEL_MAIN, experts=tuple(experts))
    return parse_survey_set(p.read_text(encoding="utf-8"), scale=scale)
