"""Small dense-matrix kernel for the crisp component matrices.

Inversion is done with explicit Gauss-Jordan elimination (partial, max-abs
column pivoting) so that near-singular inputs fail loudly with the offending
pivot column instead of silently amplifying noise. A truncated power-series
evaluator is kept alongside as an independent cross-check for the closed-form
total-relation product.
"""
from __future__ import annotations

import numpy as np

from .errors import ConvergenceError, DimensionError, DivergenceError, SingularMatrixError

#: Pivots with absolute value below this are treated as zero.
SINGULAR_PIVOT = 1e-12


def _as_square(a, name: str = "matrix") -> np.ndarray:
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DimensionError(f"{name} must contain only finite values")
    return arr


def multiply(a, b) -> np.ndarray:
    """Standard matrix product of two square matrices of equal order."""
    am = _as_square(a, "left operand")
    bm = _as_square(b, "right operand")
    if am.shape != bm.shape:
        raise DimensionError(f"operand orders differ: {am.shape[0]} vs {bm.shape[0]}")
    return am @ bm


def invert(a) -> np.ndarray:
    """Invert a square matrix by Gauss-Jordan elimination with partial pivoting.

    Raises SingularMatrixError (carrying the column index) when no pivot in a
    column exceeds SINGULAR_PIVOT in absolute value.
    """
    mat = _as_square(a)
    n = mat.shape[0]
    aug = np.hstack([mat.copy(), np.eye(n)])
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(aug[col:, col])))
        pivot = aug[pivot_row, col]
        if abs(pivot) < SINGULAR_PIVOT:
            raise SingularMatrixError(column=col, pivot=SINGULAR_PIVOT)
        if pivot_row != col:
            aug[[col, pivot_row]] = aug[[pivot_row, col]]
        aug[col] = aug[col] / pivot
        for row in range(n):
            if row != col:
                aug[row] = aug[row] - aug[row, col] * aug[col]
    return aug[:, n:]


def neumann_total_relation(g, tol: float = 1e-12, max_terms: int = 10_000) -> np.ndarray:
    """Sum the power series g + g^2 + g^3 + ... term by term.

    Only accepts matrices whose maximum absolute row sum is strictly below 1,
    a sufficient condition for the series to converge. Accumulation stops once
    the largest entry of the freshly added term drops below ``tol``; running
    past ``max_terms`` terms raises ConvergenceError.
    """
    mat = _as_square(g)
    max_row_sum = float(np.abs(mat).sum(axis=1).max()) if mat.size else 0.0
    if max_row_sum >= 1.0:
        raise DivergenceError(
            f"power series needs max absolute row sum < 1, got {max_row_sum:.6f}"
        )
    term = mat.copy()
    total = mat.copy()
    for _ in range(max_terms):
        if term.size == 0 or float(np.abs(term).max()) < tol:
            return total
        term = term @ mat
        total = total + term
    raise ConvergenceError(f"power series still above tol={tol} after {max_terms} terms")
