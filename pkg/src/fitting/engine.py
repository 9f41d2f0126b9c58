"""Exact Fitting ideals of monomial ideals.

Every minor of a Taylor matrix is an integer times a single monomial, and the minors that
do not vanish are read off the spanning forests of the relation graph (see forests.py).
The engine builds Fitt_j from the minimal forest weights and confirms each generator by
evaluating the determinant of the minor it comes from.
"""

import logging
from functools import lru_cache
from itertools import chain, combinations
from math import comb

from ..algebra.matrix import PolyMatrix, minor, minors
from ..algebra.monomial import Monomial
from ..algebra.polynomial import Polynomial
from ..config import resolve_minor_budget
from ..errors import BudgetExceeded, PreconditionViolated
from ..ideals.monomial_ideal import (
    MonomialIdeal,
    PolynomialRing,
    intersect_all,
    minimalize,
    monomial_localization,
    prime_of,
    unit_ideal,
    zero_ideal,
)
from ..ideals.primes import min_sets
from .forests import spanning_forests, witness_rows_cols
from .presentation import Presentation, presentation_of_generators, taylor_presentation

logger = logging.getLogger(__name__)


def fitting_from_presentation(
    presentation: Presentation,
    j: int,
    budget: int | None = None,
) -> MonomialIdeal:
    """Fitt_j from a Taylor-type presentation, as a monomial ideal.

    Raises:
        BudgetExceeded: If the row sets or the partial forests exceed the minor budget.
    """
    ring = presentation.ideal.ring
    m = presentation.m
    size = m - j
    if size <= 0:
        return unit_ideal(ring)
    ncols = presentation.matrix.cols
    if size > ncols:
        return zero_ideal(ring)

    limit = resolve_minor_budget(budget)
    if comb(m, size) > limit:
        raise BudgetExceeded(f"{size}-row sets of a {m}-row presentation", comb(m, size), limit)

    entry = {
        (r, c): presentation.lcms[c].quotient(presentation.generator_order[r])
        for c, pair in enumerate(presentation.pairs)
        for r in pair
    }
    weights = spanning_forests(
        m,
        presentation.pairs,
        j,
        weight=lambda r, c: entry[r, c],
        one=Monomial.one(),
        multiply=Monomial.__mul__,
        divides=Monomial.divides,
        grade=lambda w: w.degree,
        limit=limit,
    )

    memo: dict = {}
    for degree, assignment in weights.items():
        rows, cols = witness_rows_cols(assignment)
        value = minor(presentation.matrix, rows, cols, memo)
        if value.monomials() != [degree]:
            raise ArithmeticError(f"minor on rows {rows}, columns {cols} is {value}, not {degree}")
    logger.debug(f"Fitt_{j}: {len(weights)} generators confirmed by their minors")
    return minimalize(ring, weights)


@lru_cache(maxsize=8192)
def _cached_fitting(ideal: MonomialIdeal, j: int, limit: int, prune: bool) -> MonomialIdeal:
    return fitting_from_presentation(taylor_presentation(ideal, prune=prune), j, limit)


def fitting_ideal(
    ideal: MonomialIdeal,
    j: int,
    budget: int | None = None,
    prune: bool = True,
) -> MonomialIdeal:
    """Fitt_j(I), the ideal of (m - j)-minors of a presentation of I.

    Args:
        ideal: Monomial ideal with m = mu(I) minimal generators.
        j: Fitting index, j >= 0. For j >= m the result is the unit ideal.
        budget: Bound on row sets and partial forests; None uses the configured minor budget.
        prune: Drop redundant Taylor relations first (same Fitting ideals, fewer columns).
    """
    if j < 0:
        raise PreconditionViolated(f"Fitting index must be non-negative, got {j}")
    return _cached_fitting(ideal, j, resolve_minor_budget(budget), prune)


def fitting_ideal_of_generators(
    ring: PolynomialRing,
    generators: list[Monomial],
    j: int,
    budget: int | None = None,
    prune: bool = True,
) -> MonomialIdeal:
    """Fitt_j computed from a presentation on an arbitrary generating list."""
    if j < 0:
        raise PreconditionViolated(f"Fitting index must be non-negative, got {j}")
    return fitting_from_presentation(
        presentation_of_generators(ring, generators, prune=prune), j, budget
    )


def fitting_chain(ideal: MonomialIdeal, budget: int | None = None) -> list[MonomialIdeal]:
    """[Fitt_0(I), ..., Fitt_m(I)]."""
    return [fitting_ideal(ideal, j, budget) for j in range(ideal.num_gens + 1)]


def fitting_of_presentation(
    matrix: PolyMatrix,
    j: int,
    budget: int | None = None,
) -> list[Polynomial]:
    """Raw (rows - j)-minors of a user-supplied presentation matrix.

    The caller vouches that the columns generate all syzygies; nothing is monomialized.
    """
    return minors(matrix, matrix.rows - j, budget)


def fitting_locus_radical(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """sqrt(Fitt_j(I)) without minors.

    The zero set of Fitt_j(I) consists of the primes where I needs more than j
    generators, and mu only grows along larger monomial primes, so the radical is the
    intersection of P_T over the minimal variable sets T with mu(I localized at T) > j.
    """
    if j < 0:
        raise PreconditionViolated(f"Fitting index must be non-negative, got {j}")
    ring = ideal.ring
    variables = range(ring.nvars)
    subsets = chain.from_iterable(combinations(variables, k) for k in range(ring.nvars + 1))
    locus = [
        frozenset(t)
        for t in subsets
        if monomial_localization(ideal, t).num_gens > j
    ]
    return intersect_all(ring, (prime_of(ring, t) for t in min_sets(locus)))
