"""Tests for src/algebra/matrix.py."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.matrix import (
    PolyMatrix,
    check_minor_budget,
    determinant,
    minor,
    minors,
    rational_rank,
    row_echelon,
)
from src.algebra.monomial import Monomial
from src.algebra.polynomial import ONE, ZERO, Polynomial, parse_polynomial
from src.errors import BudgetExceeded
from tests.strategies import square_matrices

NAMES = ["x1", "x2", "x3", "x4"]


def _poly(text: str) -> Polynomial:
    return parse_polynomial(text, NAMES)


def _matrix(rows: list[list[str]]) -> PolyMatrix:
    return PolyMatrix.from_rows([[_poly(cell) for cell in row] for row in rows])


# ---------------------------------------------------------------------------
# PolyMatrix
# ---------------------------------------------------------------------------


def test_zero_entries_are_not_stored():
    m = PolyMatrix(2, 2, {(0, 0): ZERO, (1, 1): ONE})
    assert m.entries == {(1, 1): ONE}
    assert m.get(0, 0).is_zero()


def test_entry_outside_shape_rejected():
    with pytest.raises(IndexError):
        PolyMatrix(1, 1, {(1, 0): ONE})


def test_submatrix_and_transpose():
    m = _matrix([["x1", "x2", "0"], ["x3", "0", "x4"]])
    sub = m.submatrix([1], [0, 2])
    assert sub.rows == 1 and sub.cols == 2
    assert sub.get(0, 1) == _poly("x4")
    assert m.transpose().get(2, 1) == _poly("x4")
    assert m.column(0) == {0: _poly("x1"), 1: _poly("x3")}


# ---------------------------------------------------------------------------
# Determinants and minors
# ---------------------------------------------------------------------------


def test_two_by_two_determinant():
    m = _matrix([["x1", "x2"], ["x3", "x4"]])
    assert determinant(m) == _poly("x1*x4 - x2*x3")


@pytest.mark.parametrize(
    "rows",
    [
        [["x1", "x2"], ["x3", "x4"]],
        [["x1", "0", "x2"], ["x3", "x1*x2", "0"], ["1", "x4", "x3^2"]],
        [["x1 + x2", "x3", "0"], ["0", "x1", "x2 - x4"], ["2*x3", "0", "x1"]],
        [["x1", "x2"], ["x1", "x2"]],
    ],
)
def test_cofactor_matches_bareiss(rows):
    """Both determinant backends produce the same normalized polynomial."""
    m = _matrix(rows)
    assert determinant(m, backend="cofactor") == determinant(m, backend="bareiss")


def test_determinant_of_empty_matrix_is_one():
    assert determinant(PolyMatrix(0, 0)) == ONE
    assert determinant(PolyMatrix(0, 0), backend="bareiss") == ONE


def test_determinant_rejects_bad_input():
    with pytest.raises(ValueError):
        determinant(PolyMatrix(1, 2))
    with pytest.raises(ValueError):
        determinant(PolyMatrix(1, 1, {(0, 0): ONE}), backend="lu")


def test_minors_edge_sizes():
    m = _matrix([["x1", "x2"], ["x3", "x4"]])
    assert minors(m, 0) == [ONE]
    assert minors(m, 3) == []
    assert minors(m, 1) == [_poly("x1"), _poly("x2"), _poly("x3"), _poly("x4")]


def test_minor_on_chosen_rows_and_columns():
    m = _matrix([["x1", "0", "x2"], ["0", "x3", "x4"]])
    assert minor(m, [0, 1], [0, 2]) == _poly("x1*x4")
    with pytest.raises(ValueError):
        minor(m, [0], [0, 1])


def test_minor_budget():
    assert check_minor_budget(4, 6, 2, budget=100) == 6 * 15
    with pytest.raises(BudgetExceeded) as exc:
        check_minor_budget(4, 6, 2, budget=10)
    assert exc.value.requested == 90
    assert exc.value.limit == 10


def test_single_term_entries_give_single_term_minors():
    x = [Polynomial.from_monomial(Monomial.variable(i)) for i in range(3)]
    m = PolyMatrix.from_rows([[x[1], x[2]], [x[0], ZERO]])
    assert determinant(m).is_term()


# ---------------------------------------------------------------------------
# Integer linear algebra
# ---------------------------------------------------------------------------


def test_row_echelon_rank_and_pivots():
    assert row_echelon([[1, 2], [2, 4]]) == (1, [0])
    assert row_echelon([[0, 1], [1, 0]]) == (2, [0, 1])
    assert row_echelon([[0, 0, 3], [0, 2, 1]]) == (2, [1, 2])


def test_rational_rank_edge_cases():
    assert rational_rank([]) == 0
    assert rational_rank([1, 0, 2]) == 1
    assert rational_rank(np.eye(3, dtype=int)) == 3
    assert rational_rank([[2, 4, 6], [1, 2, 3], [0, 0, 1]]) == 2


# ---------------------------------------------------------------------------
# Determinant identities
# ---------------------------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(square_matrices())
def test_determinant_of_transpose(m):
    assert determinant(m.transpose()) == determinant(m)


@settings(max_examples=30, deadline=None)
@given(square_matrices(), st.integers(0, 3))
def test_laplace_expansion_along_any_row(m, row):
    row %= m.rows
    others = [r for r in range(m.rows) if r != row]
    expansion = ZERO
    for col in range(m.cols):
        rest = [c for c in range(m.cols) if c != col]
        term = m.get(row, col) * minor(m, others, rest)
        expansion = expansion + term.scale((-1) ** (row + col))
    assert expansion == determinant(m)


@settings(max_examples=20, deadline=None)
@given(square_matrices())
def test_cofactor_matches_bareiss_on_random_matrices(m):
    assert determinant(m, backend="cofactor") == determinant(m, backend="bareiss")
