"""Exact Gauss-Jordan elimination over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = ["InconsistentSystem", "UnderdeterminedSystem", "ExactSolution", "solve_exact"]


class InconsistentSystem(ValueError):
    pass


class UnderdeterminedSystem(ValueError):
    pass


@dataclass(frozen=True)
class ExactSolution:
    values: tuple[Fraction, ...]
    rank: int
    residuals: tuple[Fraction, ...]

    @property
    def consistent(self) -> bool:
        return not any(self.residuals)


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> ExactSolution:
    """Solve A x = b for a full-column-rank A, possibly with more rows than columns.

    Raises ``UnderdeterminedSystem`` when the columns are dependent and
    ``InconsistentSystem`` when no exact solution exists. The returned
    residuals are A x - b for every original row and are all zero on success.
    """
    rows = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    if len(rows) != len(matrix) or len(matrix) != len(rhs):
        raise ValueError("matrix and right-hand side have different lengths")
    n_cols = len(matrix[0]) if matrix else 0
    if any(len(r) != n_cols + 1 for r in rows):
        raise ValueError("ragged matrix")
    pivot_row = 0
    pivots = []
    for col in range(n_cols):
        pr = next((i for i in range(pivot_row, len(rows)) if rows[i][col]), None)
        if pr is None:
            continue
        rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
        piv = rows[pivot_row][col]
        rows[pivot_row] = [v / piv for v in rows[pivot_row]]
        for i in range(len(rows)):
            if i != pivot_row and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    rank = len(pivots)
    if any(row[-1] for row in rows[rank:]):
        raise InconsistentSystem(f"no exact solution: rank {rank}, {len(rows)} equations")
    if rank < n_cols:
        raise UnderdeterminedSystem(f"rank {rank} < {n_cols} unknowns")
    values = tuple(rows[i][-1] for i in range(n_cols))
    residuals = tuple(sum((Fraction(a) * x for a, x in zip(row, values)), Fraction(0)) - Fraction(b)
                      for row, b in zip(matrix, rhs))
    return ExactSolution(values, rank, residuals)
