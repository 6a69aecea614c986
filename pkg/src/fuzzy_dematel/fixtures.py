"""Bundled reference data: the stock-portfolio case study and example surveys.

The package ships the published worked example this engine reproduces: a
five-criteria portfolio-selection study (with fifteen sub-criteria) whose
total-relation matrix, dispatch/receive vectors and prominence/relation
tables are stored under ``data/fixtures`` and addressable by name. Two small
synthetic survey files live under ``data/surveys`` for demos and tests.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Union

import numpy as np

from .engine import FuzzyMatrix, KIND_TOTAL
from .errors import UnknownFixtureError
from .survey import CriteriaModel, Criterion
from .tfn import TFN, TriangularFuzzyNumber

_DATA_ROOT = resources.files(__package__) / "data"


@dataclass(frozen=True)
class MatrixFixture:
    """A named fuzzy matrix plus the criteria it is indexed by."""

    name: str
    summary: str
    codes: tuple[str, ...]
    labels: tuple[str, ...]
    matrix: FuzzyMatrix


@dataclass(frozen=True)
class CrispMatrixFixture:
    """A named crisp matrix plus the criteria it is indexed by."""

    name: str
    summary: str
    codes: tuple[str, ...]
    labels: tuple[str, ...]
    entries: np.ndarray


@dataclass(frozen=True)
class DispatchReceiveFixture:
    """Named dispatch/receive vectors, fuzzy and crisp."""

    name: str
    summary: str
    codes: tuple[str, ...]
    labels: tuple[str, ...]
    dispatch_fuzzy: tuple[TriangularFuzzyNumber, ...]
    receive_fuzzy: tuple[TriangularFuzzyNumber, ...]
    dispatch_crisp: tuple[float, ...]
    receive_crisp: tuple[float, ...]


@dataclass(frozen=True)
class ProminenceFixture:
    """Named prominence/relation table as printed in the case study."""

    name: str
    summary: str
    codes: tuple[str, ...]
    labels: tuple[str, ...]
    prominence_fuzzy: tuple[TriangularFuzzyNumber, ...]
    relation_fuzzy: tuple[tuple[float, float, float], ...]
    prominence_crisp: tuple[float, ...]
    relation_crisp: tuple[float, ...]
    category: tuple[str, ...]
    relation_crisp_form: str


Fixture = Union[MatrixFixture, CrispMatrixFixture, DispatchReceiveFixture, ProminenceFixture]

FIXTURE_NAMES = (
    "table2-total-relation",
    "table3-crisp-total",
    "table4-dr",
    "table5-prominence-relation",
    "table6-sub-dr",
    "table7-sub-prominence-relation",
)


def _load_json(relative: str) -> dict:
    return json.loads((_DATA_ROOT / relative).read_text(encoding="utf-8"))


def _names(doc: dict) -> tuple[tuple[str, ...], tuple[str, ...]]:
    codes = tuple(str(c["code"]) for c in doc["criteria"])
    labels = tuple(str(c.get("label", c["code"])) for c in doc["criteria"])
    return codes, labels


def _tfns(rows) -> tuple[TriangularFuzzyNumber, ...]:
    return tuple(TFN(float(r[0]), float(r[1]), float(r[2])) for r in rows)


def load_fixture(name: str) -> Fixture:
    """Load one bundled fixture by name; unknown names raise UnknownFixtureError."""
    if name not in FIXTURE_NAMES:
        raise UnknownFixtureError(
            f"unknown fixture {name!r}: expected one of {', '.join(FIXTURE_NAMES)}"
        )
    doc = _load_json(f"fixtures/{name}.json")
    codes, labels = _names(doc)
    summary = str(doc.get("summary", ""))
    if "entries" in doc and doc.get("kind") == KIND_TOTAL:
        return MatrixFixture(
            name=name,
            summary=summary,
            codes=codes,
            labels=labels,
            matrix=FuzzyMatrix.from_triples(doc["entries"], kind=KIND_TOTAL),
        )
    if "entries" in doc:
        entries = np.asarray(doc["entries"], dtype=float)
        entries.setflags(write=False)
        return CrispMatrixFixture(
            name=name, summary=summary, codes=codes, labels=labels, entries=entries
        )
    if "dispatch_fuzzy" in doc:
        return DispatchReceiveFixture(
            name=name,
            summary=summary,
            codes=codes,
            labels=labels,
            dispatch_fuzzy=_tfns(doc["dispatch_fuzzy"]),
            receive_fuzzy=_tfns(doc["receive_fuzzy"]),
            dispatch_crisp=tuple(float(v) for v in doc["dispatch_crisp"]),
            receive_crisp=tuple(float(v) for v in doc["receive_crisp"]),
        )
    return ProminenceFixture(
        name=name,
        summary=summary,
        codes=codes,
        labels=labels,
        prominence_fuzzy=_tfns(doc["prominence_fuzzy"]),
        relation_fuzzy=tuple(
            (float(r[0]), float(r[1]), float(r[2])) for r in doc["relation_fuzzy"]
        ),
        prominence_crisp=tuple(float(v) for v in doc["prominence_crisp"]),
        relation_crisp=tuple(float(v) for v in doc["relation_crisp"]),
        category=tuple(str(v) for v in doc["category"]),
        relation_crisp_form=str(doc.get("relation_crisp_form", "(l+2m+u)/4")),
    )


def list_fixtures() -> list[tuple[str, str]]:
    """(name, summary) pairs for every bundled fixture, in canonical order."""
    out = []
    for name in FIXTURE_NAMES:
        doc = _load_json(f"fixtures/{name}.json")
        out.append((name, str(doc.get("summary", ""))))
    return out


def load_criteria_model() -> CriteriaModel:
    """The case study's criteria hierarchy: 5 main criteria, 15 sub-criteria."""
    doc = _load_json("criteria.json")
    return CriteriaModel(
        criteria=tuple(
            Criterion(
                code=str(c["code"]),
                label=str(c.get("label", c["code"])),
                parent=None if c.get("parent") is None else str(c["parent"]),
            )
            for c in doc["criteria"]
        )
    )


def bundled_survey_path(name: str) -> Path:
    """Filesystem path of a bundled example survey (e.g. 'supplier_3x2')."""
    candidate = _DATA_ROOT / "surveys" / f"{name}.json"
    with resources.as_file(candidate) as p:
        path = Path(p)
    if not path.exists():
        known = sorted(f.name[:-5] for f in (_DATA_ROOT / "surveys").iterdir())
        raise UnknownFixtureError(
            f"unknown bundled survey {name!r}: expected one of {', '.join(known)}"
        )
    return path
