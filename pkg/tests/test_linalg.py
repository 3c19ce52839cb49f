from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wittenlab.linalg import InconsistentSystem, UnderdeterminedSystem, solve_exact


def test_square_system():
    sol = solve_exact([[2, 1], [1, 3]], [3, 5])
    assert sol.values == (Fraction(4, 5), Fraction(7, 5))
    assert sol.consistent and sol.rank == 2


def test_overdetermined_consistent():
    sol = solve_exact([[1, 0], [0, 1], [1, 1]], [1, 2, 3])
    assert sol.values == (1, 2)
    assert sol.residuals == (0, 0, 0)


def test_inconsistent_rejected():
    with pytest.raises(InconsistentSystem):
        solve_exact([[1, 0], [0, 1], [1, 1]], [1, 2, 4])


def test_dependent_columns_rejected():
    with pytest.raises(UnderdeterminedSystem):
        solve_exact([[1, 2], [2, 4]], [1, 2])


@given(st.lists(st.fractions(max_denominator=20), min_size=3, max_size=3),
       st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=6))
def test_recovers_planted_solution(x, rows):
    # keep only systems whose columns are independent
    rhs = [sum(a * xi for a, xi in zip(r, x)) for r in rows]
    try:
        sol = solve_exact(rows, rhs)
    except UnderdeterminedSystem:
        return
    assert list(sol.values) == x
