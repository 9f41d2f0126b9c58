"""Sparse polynomial matrices, determinants, minors and exact ranks."""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np
import sympy

from ..config import resolve_minor_budget
from ..errors import BudgetExceeded
from .monomial import Monomial
from .polynomial import ONE, ZERO, Polynomial, normalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolyMatrix:
    """rows x cols matrix of polynomials; entries absent from the map are zero."""

    rows: int
    cols: int
    entries: Mapping[tuple[int, int], Polynomial] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for (r, c), value in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols} matrix")
            if not value.is_zero():
                cleaned[(r, c)] = value
        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = {
            (r, c): value for r, row in enumerate(rows) for c, value in enumerate(row)
        }
        return cls(nrows, ncols, entries)

    def get(self, row: int, col: int) -> Polynomial:
        return self.entries.get((row, col), ZERO)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        col_pos = {c: q for q, c in enumerate(cols)}
        row_pos = {r: p for p, r in enumerate(rows)}
        entries = {
            (row_pos[r], col_pos[c]): v
            for (r, c), v in self.entries.items()
            if r in row_pos and c in col_pos
        }
        return PolyMatrix(len(rows), len(cols), entries)

    def column(self, col: int) -> dict[int, Polynomial]:
        """Nonzero entries of one column, keyed by row."""
        return {r: v for (r, c), v in self.entries.items() if c == col}

    def format(self, names: Sequence[str] | None = None) -> str:
        lines = []
        for r in range(self.rows):
            cells = [self.get(r, c).format(names) for c in range(self.cols)]
            lines.append("[" + ", ".join(cells) + "]")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Determinants
# ---------------------------------------------------------------------------


def _cofactor(
    entries: Mapping[tuple[int, int], Polynomial],
    rows: tuple[int, ...],
    cols: tuple[int, ...],
    memo: dict,
) -> Polynomial:
    """Laplace expansion along the sparsest remaining row or column."""
    size = len(rows)
    if size == 0:
        return ONE
    key = (rows, cols)
    cached = memo.get(key)
    if cached is not None:
        return cached

    if size == 1:
        result = entries.get((rows[0], cols[0]), ZERO)
    else:
        row_hits = [[q for q, c in enumerate(cols) if (r, c) in entries] for r in rows]
        col_hits = [[p for p, r in enumerate(rows) if (r, c) in entries] for c in cols]
        best_row = min(range(size), key=lambda p: len(row_hits[p]))
        best_col = min(range(size), key=lambda q: len(col_hits[q]))

        if not row_hits[best_row] or not col_hits[best_col]:
            result = ZERO
        elif len(row_hits[best_row]) <= len(col_hits[best_col]):
            p = best_row
            rest_rows = rows[:p] + rows[p + 1 :]
            acc = ZERO
            for q in row_hits[p]:
                minor = _cofactor(entries, rest_rows, cols[:q] + cols[q + 1 :], memo)
                if minor.is_zero():
                    continue
                term = entries[(rows[p], cols[q])] * minor
                acc = acc - term if (p + q) % 2 else acc + term
            result = acc
        else:
            q = best_col
            rest_cols = cols[:q] + cols[q + 1 :]
            acc = ZERO
            for p in col_hits[q]:
                minor = _cofactor(entries, rows[:p] + rows[p + 1 :], rest_cols, memo)
                if minor.is_zero():
                    continue
                term = entries[(rows[p], cols[q])] * minor
                acc = acc - term if (p + q) % 2 else acc + term
            result = acc

    memo[key] = result
    return result


def _bareiss(matrix: PolyMatrix) -> Polynomial:
    """Fraction-free elimination through sympy on a symbolic image of the matrix."""
    nvars = 1 + max(
        (i for value in matrix.entries.values() for m in value.monomials() for i in m.support),
        default=-1,
    )
    symbols = sympy.symbols(f"x0:{nvars}") if nvars else ()

    def to_expr(value: Polynomial):
        expr = sympy.Integer(0)
        for monomial, coefficient in value.terms:
            factor = sympy.Integer(coefficient)
            for i, e in monomial.exponents:
                factor *= symbols[i] ** e
            expr += factor
        return expr

    image = sympy.Matrix(
        matrix.rows,
        matrix.cols,
        lambda r, c: to_expr(matrix.get(r, c)),
    )
    det = sympy.expand(image.det(method="bareiss"))
    if not symbols:
        return Polynomial.constant(int(det))
    poly = sympy.Poly(det, *symbols)
    return normalize((int(c), Monomial.from_vector(exps)) for exps, c in poly.terms())


def determinant(matrix: PolyMatrix, backend: str = "cofactor") -> Polynomial:
    """Exact determinant of a square polynomial matrix.

    Args:
        matrix: Square PolyMatrix.
        backend: "cofactor" (sparse Laplace expansion with memoized sub-minors) or
            "bareiss" (fraction-free elimination via sympy). Both return the same polynomial.

    Returns:
        The determinant as a normalized Polynomial.
    """
    if not matrix.is_square():
        raise ValueError(f"determinant of a non-square {matrix.rows}x{matrix.cols} matrix")
    if backend == "bareiss":
        return _bareiss(matrix) if matrix.rows else ONE
    if backend != "cofactor":
        raise ValueError(f"unknown determinant backend {backend!r}")
    return _cofactor(matrix.entries, tuple(range(matrix.rows)), tuple(range(matrix.cols)), {})


def minor(
    matrix: PolyMatrix,
    rows: Sequence[int],
    cols: Sequence[int],
    memo: dict | None = None,
) -> Polynomial:
    """Determinant of the submatrix on `rows` x `cols`; a shared memo reuses sub-minors."""
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    return _cofactor(matrix.entries, tuple(rows), tuple(cols), {} if memo is None else memo)


def check_minor_budget(nrows: int, ncols: int, size: int, budget: int | None = None) -> int:
    """Raise BudgetExceeded when C(nrows,size)*C(ncols,size) exceeds the minor budget."""
    limit = resolve_minor_budget(budget)
    requested = comb(nrows, size) * comb(ncols, size)
    if requested > limit:
        raise BudgetExceeded(f"{size}-minors of a {nrows}x{ncols} matrix", requested, limit)
    return requested


def minors(matrix: PolyMatrix, size: int, budget: int | None = None) -> list[Polynomial]:
    """All size x size minors, in lexicographic order of (row set, column set).

    size <= 0 gives [1]; a size larger than either dimension gives [] (the zero ideal).
    Duplicates are kept.
    """
    if size <= 0:
        return [ONE]
    if size > matrix.rows or size > matrix.cols:
        return []
    requested = check_minor_budget(matrix.rows, matrix.cols, size, budget)
    logger.debug(f"Enumerating {requested} minors of size {size}")

    memo: dict = {}
    return [
        _cofactor(matrix.entries, rows, cols, memo)
        for rows in combinations(range(matrix.rows), size)
        for cols in combinations(range(matrix.cols), size)
    ]


# ---------------------------------------------------------------------------
# Integer linear algebra
# ---------------------------------------------------------------------------


def row_echelon(rows: Sequence[Sequence[int]] | np.ndarray) -> tuple[int, list[int]]:
    """Fraction-free (Bareiss) row reduction of an integer matrix.

    Returns:
        (rank over the rationals, pivot column indices in increasing order).
    """
    work = np.array(rows, dtype=object)
    if work.size == 0:
        return 0, []
    if work.ndim == 1:
        work = work.reshape(1, -1)
    nrows, ncols = work.shape

    pivots: list[int] = []
    rank = 0
    previous = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot_row = next((r for r in range(rank, nrows) if work[r, col] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            work[[rank, pivot_row]] = work[[pivot_row, rank]]
        pivot = work[rank, col]
        # Every entry below the pivot row stays a minor of the input, so division is exact.
        for r in range(rank + 1, nrows):
            work[r, col + 1 :] = (
                pivot * work[r, col + 1 :] - work[r, col] * work[rank, col + 1 :]
            ) // previous
            work[r, col] = 0
        previous = pivot
        pivots.append(col)
        rank += 1
    return rank, pivots


def rational_rank(matrix: Sequence[Sequence[int]] | np.ndarray) -> int:
    """Rank over the rationals of an integer matrix."""
    return row_echelon(matrix)[0]
