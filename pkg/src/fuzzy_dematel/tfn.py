"""Triangular fuzzy numbers and the linguistic influence scale.

A triangular fuzzy number (l, m, u) describes an uncertain quantity whose
membership rises linearly from l to a peak at m and falls back to zero at u.
Expert judgments are collected on an 11-level linguistic scale and mapped to
such triples before any matrix work happens.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import UnknownTermError

Triple = tuple[float, float, float]


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """An (l, m, u) triple with l <= m <= u."""

    l: float
    m: float
    u: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.l, self.m, self.u)):
            raise ValueError(f"fuzzy triple must be finite, got ({self.l}, {self.m}, {self.u})")
        if not (self.l <= self.m <= self.u):
            raise ValueError(
                f"fuzzy triple must satisfy l <= m <= u, got ({self.l}, {self.m}, {self.u})"
            )

    def __add__(self, other: "TriangularFuzzyNumber") -> "TriangularFuzzyNumber":
        if not isinstance(other, TriangularFuzzyNumber):
            return NotImplemented
        return TriangularFuzzyNumber(self.l + other.l, self.m + other.m, self.u + other.u)

    def __truediv__(self, s: float) -> "TriangularFuzzyNumber":
        """Shrink every component by a positive factor s."""
        if not isinstance(s, (int, float)):
            return NotImplemented
        if not (s > 0):
            raise ValueError(f"scale divisor must be positive, got {s}")
        return TriangularFuzzyNumber(self.l / s, self.m / s, self.u / s)

    def __iter__(self) -> Iterator[float]:
        return iter((self.l, self.m, self.u))

    def as_tuple(self) -> Triple:
        return (self.l, self.m, self.u)


TFN = TriangularFuzzyNumber

FuzzyLike = Union[TriangularFuzzyNumber, Sequence[float]]


def _components(value: FuzzyLike) -> Triple:
    if isinstance(value, TriangularFuzzyNumber):
        return value.as_tuple()
    l, m, u = value
    return (float(l), float(m), float(u))


def subtract_components(a: FuzzyLike, b: FuzzyLike) -> Triple:
    """Componentwise difference a - b.

    The result is a plain signed triple: it may be negative and need not
    satisfy the l <= m <= u ordering, so it is deliberately not returned
    as a TriangularFuzzyNumber.
    """
    al, am, au = _components(a)
    bl, bm, bu = _components(b)
    return (al - bl, am - bm, au - bu)


def defuzzify(value: FuzzyLike) -> float:
    """Graded-mean crisp value (l + 2m + u) / 4 of a fuzzy triple."""
    l, m, u = _components(value)
    return (l + 2.0 * m + u) / 4.0


@dataclass(frozen=True)
class ScaleEntry:
    """One row of a linguistic scale: token, crisp level, long name, fuzzy value."""

    token: str
    level: int
    name: str
    value: TriangularFuzzyNumber


class LinguisticScale:
    """Ordered mapping from judgment tokens / crisp levels to fuzzy numbers.

    Levels must run 0..n-1 without gaps and tokens must be unique
    (case-insensitively), so every judgment has exactly one reading.
    """

    def __init__(self, entries: Iterable[ScaleEntry]):
        self.entries: tuple[ScaleEntry, ...] = tuple(entries)
        if not self.entries:
            raise ValueError("a linguistic scale needs at least one entry")
        levels = [e.level for e in self.entries]
        if levels != list(range(len(self.entries))):
            raise ValueError(f"scale levels must run 0..{len(self.entries) - 1}, got {levels}")
        self._by_token: dict[str, ScaleEntry] = {}
        for e in self.entries:
            key = e.token.upper()
            if key in self._by_token:
                raise ValueError(f"duplicate scale token {e.token!r}")
            self._by_token[key] = e

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[ScaleEntry]:
        return iter(self.entries)

    @property
    def max_level(self) -> int:
        return len(self.entries) - 1

    def entry(self, key: Union[str, int]) -> ScaleEntry:
        """Look up a scale entry by token (string) or crisp level (integer)."""
        if isinstance(key, bool):
            raise UnknownTermError(f"unknown judgment level {key!r}")
        if isinstance(key, int):
            if 0 <= key <= self.max_level:
                return self.entries[key]
            raise UnknownTermError(
                f"unknown judgment level {key}: expected an integer in 0..{self.max_level}"
            )
        if isinstance(key, str):
            entry = self._by_token.get(key.strip().upper())
            if entry is not None:
                return entry
            raise UnknownTermError(
                f"unknown judgment token {key!r}: expected one of "
                + ", ".join(e.token for e in self.entries)
            )
        raise UnknownTermError(f"unknown judgment {key!r}: expected a token or an integer level")

    def fuzzify(self, key: Union[str, int]) -> TriangularFuzzyNumber:
        return self.entry(key).value


#: Default 11-level influence scale. Tokens VHI and EHI name levels 8 and 9 so
#: that every abbreviation is unique; integer levels 0..10 are always accepted.
INFLUENCE_SCALE = LinguisticScale(
    [
        ScaleEntry("NI", 0, "No influence", TFN(0.0, 0.0, 0.0)),
        ScaleEntry("ELI", 1, "Extremely low influence", TFN(0.0, 0.0, 0.1)),
        ScaleEntry("VLI", 2, "Very low influence", TFN(0.0, 0.1, 0.2)),
        ScaleEntry("MLI", 3, "Moderately low influence", TFN(0.1, 0.2, 0.3)),
        ScaleEntry("LI", 4, "Low influence", TFN(0.2, 0.3, 0.4)),
        ScaleEntry("MI", 5, "Medium influence", TFN(0.3, 0.4, 0.5)),
        ScaleEntry("HI", 6, "High influence", TFN(0.4, 0.5, 0.6)),
        ScaleEntry("MHI", 7, "Moderately high influence", TFN(0.5, 0.6, 0.7)),
        ScaleEntry("VHI", 8, "Very high influence", TFN(0.6, 0.7, 0.8)),
        ScaleEntry("EHI", 9, "Extremely high influence", TFN(0.7, 0.8, 0.9)),
        ScaleEntry("VELI", 10, "Very extremely high influence", TFN(0.8, 0.9, 1.0)),
    ]
)


def fuzzify(key: Union[str, int], scale: LinguisticScale = INFLUENCE_SCALE) -> TriangularFuzzyNumber:
    """Map a judgment token or crisp level to its fuzzy number on the scale."""
    return scale.fuzzify(key)
