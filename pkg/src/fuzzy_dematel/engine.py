"""Fuzzy DEMATEL pipeline: aggregate -> normalize -> total relation -> analysis.

A run starts from one direct-relation matrix per expert (all judgments already
fuzzified), averages them, rescales into the unit range, sums up all direct and
indirect influence paths via the closed form M (I - M)^-1 per component, and
finally condenses the total-relation matrix into dispatch/receive vectors,
prominence and net-relation scores, cause/effect classes, a prominence ranking
and a thresholded influence map.
"""
from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .errors import (
    DegenerateInputError,
    DematelError,
    DimensionError,
    NoSurveysError,
    SingularMatrixError,
)
from .tfn import TFN, TriangularFuzzyNumber, defuzzify, subtract_components

KIND_DIRECT = "direct"
KIND_AGGREGATED = "aggregated"
KIND_NORMALIZED = "normalized"
KIND_TOTAL = "total"

NET_CAUSE = "net cause"
NET_EFFECT = "net effect"
NEUTRAL = "neutral"

#: Net relations within this band of zero are classified as neutral.
CLASSIFY_EPS = 1e-12

#: Row-sum slack accepted by the total-relation feasibility guard.
_FEASIBILITY_SLACK = 1e-12

_COMPONENT_NAMES = ("low", "mid", "upp")


@dataclass(frozen=True, eq=False)
class FuzzyMatrix:
    """Square matrix of fuzzy triples stored as three aligned component arrays."""

    low: np.ndarray
    mid: np.ndarray
    upp: np.ndarray
    kind: str = KIND_DIRECT

    def __post_init__(self) -> None:
        arrays = []
        for name in _COMPONENT_NAMES:
            arr = np.array(getattr(self, name), dtype=float, copy=True)
            if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
                raise DimensionError(f"{name} component must be square, got shape {arr.shape}")
            if not np.all(np.isfinite(arr)):
                raise DimensionError(f"{name} component must contain only finite values")
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
            arrays.append(arr)
        low, mid, upp = arrays
        if not (low.shape == mid.shape == upp.shape):
            raise DimensionError(
                f"component shapes differ: {low.shape}, {mid.shape}, {upp.shape}"
            )
        if not (np.all(low <= mid) and np.all(mid <= upp)):
            raise DimensionError("components must satisfy low <= mid <= upp entrywise")

    @property
    def order(self) -> int:
        return self.low.shape[0]

    def entry(self, i: int, j: int) -> TriangularFuzzyNumber:
        return TFN(float(self.low[i, j]), float(self.mid[i, j]), float(self.upp[i, j]))

    def to_triples(self) -> list[list[list[float]]]:
        n = self.order
        return [
            [[float(self.low[i, j]), float(self.mid[i, j]), float(self.upp[i, j])] for j in range(n)]
            for i in range(n)
        ]

    @classmethod
    def from_triples(cls, triples: Sequence[Sequence[Sequence[float]]], kind: str = KIND_DIRECT) -> "FuzzyMatrix":
        arr = np.asarray(triples, dtype=float)
        if arr.ndim != 3 or arr.shape[2] != 3 or arr.shape[0] != arr.shape[1]:
            raise DimensionError(
                f"expected an n x n grid of (l, m, u) triples, got shape {arr.shape}"
            )
        return cls(low=arr[:, :, 0], mid=arr[:, :, 1], upp=arr[:, :, 2], kind=kind)

    def allclose(self, other: "FuzzyMatrix", tol: float = 1e-9) -> bool:
        return (
            self.order == other.order
            and bool(np.allclose(self.low, other.low, rtol=0.0, atol=tol))
            and bool(np.allclose(self.mid, other.mid, rtol=0.0, atol=tol))
            and bool(np.allclose(self.upp, other.upp, rtol=0.0, atol=tol))
        )


def aggregate(surveys: Sequence[FuzzyMatrix]) -> FuzzyMatrix:
    """Cellwise arithmetic mean of the experts' direct-relation matrices.

    Per-cell sums are exactly rounded (math.fsum), so the result does not
    depend on the order in which surveys are given.
    """
    surveys = list(surveys)
    if not surveys:
        raise NoSurveysError("cannot aggregate an empty survey sequence")
    n = surveys[0].order
    for idx, s in enumerate(surveys):
        if s.order != n:
            raise DimensionError(
                f"survey {idx} has order {s.order}, expected {n} like the first one"
            )
    count = len(surveys)
    components = []
    for name in _COMPONENT_NAMES:
        stacked = [getattr(s, name) for s in surveys]
        mean = np.empty((n, n), dtype=float)
        for i in range(n):
            for j in range(n):
                mean[i, j] = math.fsum(layer[i, j] for layer in stacked) / count
        components.append(mean)
    return FuzzyMatrix(low=components[0], mid=components[1], upp=components[2], kind=KIND_AGGREGATED)


def normalize(aggregated: FuzzyMatrix) -> tuple[FuzzyMatrix, float]:
    """Divide every component by c = max over rows of the upper-component row sum.

    Returns the rescaled matrix together with c. All entries land in [0, 1]
    and the largest upper-component row sum becomes exactly 1.
    """
    upper_row_sums = [math.fsum(aggregated.upp[i]) for i in range(aggregated.order)]
    c = max(upper_row_sums, default=0.0)
    if c <= 0.0:
        raise DegenerateInputError(
            "aggregated matrix has no positive entries; nothing to normalize"
        )
    return (
        FuzzyMatrix(
            low=aggregated.low / c,
            mid=aggregated.mid / c,
            upp=aggregated.upp / c,
            kind=KIND_NORMALIZED,
        ),
        c,
    )


def total_relation(normalized: FuzzyMatrix) -> FuzzyMatrix:
    """Sum all direct and indirect influence chains per component.

    Evaluates the closed form M (I - M)^-1 for each component matrix M.
    Each component's maximum row sum must not exceed 1 (tiny float slack
    allowed); a singular I - M propagates as SingularMatrixError tagged
    with the component name.
    """
    n = normalized.order
    eye = np.eye(n)
    results = []
    for name in _COMPONENT_NAMES:
        comp = getattr(normalized, name)
        max_row_sum = float(np.abs(comp).sum(axis=1).max()) if n else 0.0
        if max_row_sum > 1.0 + _FEASIBILITY_SLACK:
            raise DegenerateInputError(
                f"{name} component has row sum {max_row_sum:.6f} > 1; "
                "matrix is not normalized"
            )
        try:
            inverse = linalg.invert(eye - comp)
        except SingularMatrixError as err:
            err.args = (f"{name} component: {err.args[0]}",)
            raise
        results.append(comp @ inverse)
    low, mid, upp = results
    # Independent inversions can perturb exact component ties by ~1 ulp;
    # restore the l <= m <= u order they satisfy mathematically.
    mid = np.maximum(mid, low)
    upp = np.maximum(upp, mid)
    return FuzzyMatrix(low=low, mid=mid, upp=upp, kind=KIND_TOTAL)


def crisp_matrix(matrix: FuzzyMatrix) -> np.ndarray:
    """Defuzzify every cell with the graded mean (l + 2m + u) / 4."""
    return (matrix.low + 2.0 * matrix.mid + matrix.upp) / 4.0


@dataclass(frozen=True)
class InfluenceVectors:
    """Row sums (dispatch) and column sums (receive) of a total-relation matrix."""

    dispatch_fuzzy: tuple[TriangularFuzzyNumber, ...]
    receive_fuzzy: tuple[TriangularFuzzyNumber, ...]
    dispatch: tuple[float, ...]
    receive: tuple[float, ...]


def dispatch_receive(total: FuzzyMatrix) -> InfluenceVectors:
    """Fuzzy row/column sums of the total-relation matrix plus their crisp values."""
    d_fuzzy = []
    r_fuzzy = []
    for i in range(total.order):
        d_fuzzy.append(
            TFN(float(total.low[i].sum()), float(total.mid[i].sum()), float(total.upp[i].sum()))
        )
        r_fuzzy.append(
            TFN(
                float(total.low[:, i].sum()),
                float(total.mid[:, i].sum()),
                float(total.upp[:, i].sum()),
            )
        )
    return InfluenceVectors(
        dispatch_fuzzy=tuple(d_fuzzy),
        receive_fuzzy=tuple(r_fuzzy),
        dispatch=tuple(defuzzify(v) for v in d_fuzzy),
        receive=tuple(defuzzify(v) for v in r_fuzzy),
    )


@dataclass(frozen=True)
class ProminenceRelation:
    """Per-criterion prominence (d + r) and signed net relation (d - r)."""

    prominence_fuzzy: tuple[TriangularFuzzyNumber, ...]
    relation_triples: tuple[tuple[float, float, float], ...]
    prominence: tuple[float, ...]
    relation: tuple[float, ...]


def prominence_relation(
    dispatch_fuzzy: Sequence[TriangularFuzzyNumber],
    receive_fuzzy: Sequence[TriangularFuzzyNumber],
) -> ProminenceRelation:
    """Combine dispatch/receive vectors into prominence and net-relation scores.

    The relation triple is the componentwise difference, kept as a signed
    triple; its graded mean equals dispatch - receive by linearity.
    """
    if len(dispatch_fuzzy) != len(receive_fuzzy):
        raise DimensionError(
            f"vector lengths differ: {len(dispatch_fuzzy)} vs {len(receive_fuzzy)}"
        )
    prominence_fuzzy = tuple(d + r for d, r in zip(dispatch_fuzzy, receive_fuzzy))
    relation_triples = tuple(
        subtract_components(d, r) for d, r in zip(dispatch_fuzzy, receive_fuzzy)
    )
    return ProminenceRelation(
        prominence_fuzzy=prominence_fuzzy,
        relation_triples=relation_triples,
        prominence=tuple(defuzzify(p) for p in prominence_fuzzy),
        relation=tuple(defuzzify(t) for t in relation_triples),
    )


def classify(relation: float, eps: float = CLASSIFY_EPS) -> str:
    """Net cause if the crisp net relation is positive, net effect if negative."""
    if relation > eps:
        return NET_CAUSE
    if relation < -eps:
        return NET_EFFECT
    return NEUTRAL


def rank_by_prominence(prominence: Sequence[float]) -> tuple[int, ...]:
    """1-based ranks by descending prominence; ties keep input order."""
    order = sorted(range(len(prominence)), key=lambda i: (-prominence[i], i))
    ranks = [0] * len(prominence)
    for position, idx in enumerate(order, start=1):
        ranks[idx] = position
    return tuple(ranks)


def irm_edges(
    crisp_total: np.ndarray, threshold: float | None = None
) -> tuple[float, list[tuple[int, int]]]:
    """Directed influence-map edges above the threshold, diagonal excluded.

    When no threshold is given, the arithmetic mean of all n^2 entries is
    used. Returns the threshold actually applied plus row-major (i, j) pairs
    with entry >= threshold and i != j.
    """
    arr = np.asarray(crisp_total, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"crisp total matrix must be square, got shape {arr.shape}")
    if threshold is None:
        threshold = float(arr.mean()) if arr.size else 0.0
    edges = [
        (i, j)
        for i in range(arr.shape[0])
        for j in range(arr.shape[1])
        if i != j and arr[i, j] >= threshold
    ]
    return float(threshold), edges


@dataclass(frozen=True)
class CriterionResult:
    """Everything the analysis derives for one criterion."""

    code: str
    label: str
    dispatch_fuzzy: TriangularFuzzyNumber
    receive_fuzzy: TriangularFuzzyNumber
    dispatch: float
    receive: float
    prominence_fuzzy: TriangularFuzzyNumber
    relation_triple: tuple[float, float, float]
    prominence: float
    relation: float
    category: str
    rank: int


@dataclass(frozen=True)
class DematelResult:
    """Full pipeline output with every intermediate stage retained."""

    codes: tuple[str, ...]
    labels: tuple[str, ...]
    aggregated: FuzzyMatrix | None
    normalization_constant: float | None
    normalized: FuzzyMatrix | None
    total: FuzzyMatrix
    crisp_total: np.ndarray
    criteria: tuple[CriterionResult, ...]
    threshold: float
    edges: tuple[tuple[str, str], ...]

    @property
    def order(self) -> int:
        return len(self.codes)

    def by_code(self, code: str) -> CriterionResult:
        for item in self.criteria:
            if item.code == code:
                return item
        raise KeyError(code)


def _default_codes(n: int) -> tuple[str, ...]:
    return tuple(f"C{i + 1}" for i in range(n))


@contextmanager
def _stage(name: str):
    """Tag any domain error escaping the block with the stage it came from."""
    try:
        yield
    except DematelError as err:
        if err.stage is None:
            err.stage = name
        raise


def _analysis_tail(
    total: FuzzyMatrix,
    codes: Sequence[str],
    labels: Sequence[str],
    threshold: float | None,
    aggregated: FuzzyMatrix | None,
    normalization_constant: float | None,
    normalized: FuzzyMatrix | None,
) -> DematelResult:
    with _stage("dispatch-receive"):
        vectors = dispatch_receive(total)
        scores = prominence_relation(vectors.dispatch_fuzzy, vectors.receive_fuzzy)
    prominence_fuzzy = scores.prominence_fuzzy
    relation_triples = scores.relation_triples
    prominence = scores.prominence
    relation = scores.relation
    categories = [classify(v) for v in relation]
    ranks = rank_by_prominence(prominence)
    with _stage("influence-map"):
        crisp = crisp_matrix(total)
        applied_threshold, index_edges = irm_edges(crisp, threshold)
    criteria = tuple(
        CriterionResult(
            code=codes[i],
            label=labels[i],
            dispatch_fuzzy=vectors.dispatch_fuzzy[i],
            receive_fuzzy=vectors.receive_fuzzy[i],
            dispatch=vectors.dispatch[i],
            receive=vectors.receive[i],
            prominence_fuzzy=prominence_fuzzy[i],
            relation_triple=relation_triples[i],
            prominence=prominence[i],
            relation=relation[i],
            category=categories[i],
            rank=ranks[i],
        )
        for i in range(total.order)
    )
    return DematelResult(
        codes=tuple(codes),
        labels=tuple(labels),
        aggregated=aggregated,
        normalization_constant=normalization_constant,
        normalized=normalized,
        total=total,
        crisp_total=crisp,
        criteria=criteria,
        threshold=applied_threshold,
        edges=tuple((codes[i], codes[j]) for i, j in index_edges),
    )


def _resolve_names(
    n: int, codes: Sequence[str] | None, labels: Sequence[str] | None
) -> tuple[tuple[str, ...], tuple[str, ...]]:
    resolved_codes = tuple(codes) if codes is not None else _default_codes(n)
    if len(resolved_codes) != n:
        raise DimensionError(f"got {len(resolved_codes)} codes for a matrix of order {n}")
    resolved_labels = tuple(labels) if labels is not None else resolved_codes
    if len(resolved_labels) != n:
        raise DimensionError(f"got {len(resolved_labels)} labels for a matrix of order {n}")
    return resolved_codes, resolved_labels


def run_pipeline(
    surveys: Sequence[FuzzyMatrix],
    codes: Sequence[str] | None = None,
    labels: Sequence[str] | None = None,
    threshold: float | None = None,
) -> DematelResult:
    """Run the full pipeline from per-expert direct-relation matrices."""
    surveys = list(surveys)
    if not surveys:
        raise NoSurveysError("cannot analyze an empty survey sequence")
    resolved_codes, resolved_labels = _resolve_names(surveys[0].order, codes, labels)
    with _stage("aggregate"):
        aggregated = aggregate(surveys)
    with _stage("normalize"):
        normalized, c = normalize(aggregated)
    with _stage("total-relation"):
        total = total_relation(normalized)
    return _analysis_tail(
        total,
        resolved_codes,
        resolved_labels,
        threshold,
        aggregated=aggregated,
        normalization_constant=c,
        normalized=normalized,
    )


def analyze_total_relation(
    total: FuzzyMatrix,
    codes: Sequence[str] | None = None,
    labels: Sequence[str] | None = None,
    threshold: float | None = None,
) -> DematelResult:
    """Run only the analysis tail, starting from an existing total-relation matrix."""
    resolved_codes, resolved_labels = _resolve_names(total.order, codes, labels)
    return _analysis_tail(
        total,
        resolved_codes,
        resolved_labels,
        threshold,
        aggregated=None,
        normalization_constant=None,
        normalized=None,
    )
