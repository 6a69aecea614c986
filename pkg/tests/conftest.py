"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from fuzzy_dematel import (
    DematelError,
    FuzzyMatrix,
    INFLUENCE_SCALE,
    load_fixture,
    run_pipeline,
)

TESTS_DIR = Path(__file__).parent
DATA_DIR = TESTS_DIR / "data"
GOLDEN_DIR = TESTS_DIR / "golden"

# One line per acceptance criterion, echoed in the terminal summary so the
# verdicts stay visible even under pytest's output capture.
ACCEPTANCE_LOG: list[str] = []


def record_criterion(line: str) -> None:
    ACCEPTANCE_LOG.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter) -> None:
    if ACCEPTANCE_LOG:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def table2():
    return load_fixture("table2-total-relation")


@pytest.fixture(scope="session")
def table3():
    return load_fixture("table3-crisp-total")


@pytest.fixture(scope="session")
def table4():
    return load_fixture("table4-dr")


@pytest.fixture(scope="session")
def table5():
    return load_fixture("table5-prominence-relation")


@pytest.fixture(scope="session")
def table6():
    return load_fixture("table6-sub-dr")


@pytest.fixture(scope="session")
def table7():
    return load_fixture("table7-sub-prominence-relation")


@pytest.fixture(scope="session")
def supplier_oracle():
    """Frozen expected values for the bundled 3x2 survey, from tests/oracle.py."""
    with open(DATA_DIR / "supplier_3x2_oracle.json", encoding="utf-8") as fh:
        return json.load(fh)


def random_grids(rng: random.Random, n: int, experts: int) -> list[list[list[int]]]:
    """Random integer-level judgment grids with a zero diagonal."""
    return [
        [[0 if i == j else rng.randint(0, 10) for j in range(n)] for i in range(n)]
        for _ in range(experts)
    ]


def surveys_from_grids(grids) -> list[FuzzyMatrix]:
    return [
        FuzzyMatrix.from_triples(
            [[INFLUENCE_SCALE.fuzzify(level).as_tuple() for level in row] for row in grid]
        )
        for grid in grids
    ]


def draw_analyzable_grids(
    rng: random.Random, n: int, experts: int
) -> list[list[list[int]]]:
    """Draw random grids until the pipeline accepts them.

    Rejects the rare degenerate draws (an all-zero batch, or a judgment
    pattern whose normalized matrix has no convergent total-relation
    series); invariants are only claimed for analyzable inputs.
    """
    for _ in range(100):
        grids = random_grids(rng, n, experts)
        try:
            run_pipeline(surveys_from_grids(grids))
        except DematelError:
            continue
        return grids
    raise RuntimeError(f"no analyzable draw found for n={n}, experts={experts}")


def permute_grid(grid, perm):
    """Apply one criterion permutation to both axes of a judgment grid."""
    return [[grid[i][j] for j in perm] for i in perm]
