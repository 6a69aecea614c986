"""Domain error types raised across the analysis pipeline.

Every error carries an optional ``stage`` attribute that the pipeline
runner fills in so callers can tell which step rejected the input.
"""
from __future__ import annotations


class DematelError(Exception):
    """Base class for all analysis errors."""

    stage: str | None = None


class DimensionError(DematelError):
    """Matrix or grid dimensions are inconsistent with what an operation needs."""


class SingularMatrixError(DematelError):
    """Gauss-Jordan elimination found no usable pivot for some column."""

    def __init__(self, column: int, pivot: float):
        self.column = column
        self.pivot = pivot
        super().__init__(
            f"matrix is singular: no pivot above {abs(pivot):.3e} in column {column}"
        )


class DivergenceError(DematelError):
    """The power series cannot converge for the given matrix."""


class ConvergenceError(DematelError):
    """The power series did not settle within the allowed number of terms."""


class UnknownTermError(DematelError):
    """A judgment token or crisp level is not part of the linguistic scale."""


class UnknownFixtureError(DematelError):
    """No bundled fixture exists under the requested name."""


class NoSurveysError(DematelError):
    """An aggregation step received an empty survey sequence."""


class DegenerateInputError(DematelError):
    """Input is structurally valid but carries no usable signal (e.g. all zeros)."""


class SurveyFormatError(DematelError):
    """A survey document is malformed; the message points at the offending location."""


class DiagonalViolationError(SurveyFormatError):
    """A self-influence cell holds a nonzero judgment."""
