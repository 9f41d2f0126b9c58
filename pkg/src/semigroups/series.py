"""Presentations of monomial ideals in K[[t^S]] and Fitt_1 through truncated series.

A monomial ideal I = (t^e_1, ..., t^e_m) of K[[t^S]] is presented by the pairwise relations
t^(d - e_i) E_i - t^(d - e_j) E_j, one for each minimal generator d of (e_i + S) and
(e_j + S) intersected. Rows have degree e_i and columns degree d, so every minor is an
integer times a single power of t and Fitting ideals are again monomial.
"""

import logging
import operator
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

from ..algebra.matrix import PolyMatrix, minor, row_echelon
from ..algebra.monomial import Monomial
from ..algebra.polynomial import Polynomial
from ..config import resolve_minor_budget
from ..errors import BudgetExceeded, InsufficientBound, PreconditionViolated
from ..fitting.forests import spanning_forests, witness_rows_cols
from .relative_ideal import (
    RelativeIdeal,
    principal,
    rel_intersection,
    relative_ideal,
    require_ideal,
)
from .semigroup import NumericalSemigroup

logger = logging.getLogger(__name__)

Relation = tuple[int, int, int]


def t_power(exponent: int, coefficient: int = 1) -> Polynomial:
    """coefficient * t^exponent, t being variable 0."""
    if exponent == 0:
        return Polynomial.constant(coefficient)
    return Polynomial.from_monomial(Monomial.variable(0, exponent), coefficient)


def t_order(poly: Polynomial) -> int:
    """Smallest exponent occurring in a nonzero series polynomial."""
    return min(m.exponent(0) for m in poly.monomials())


# ---------------------------------------------------------------------------
# Presentation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SemigroupPresentation:
    """Pairwise-relation matrix of I: row i is the generator t^e_i, column (i, j, d)."""

    ideal: RelativeIdeal
    relations: tuple[Relation, ...]
    matrix: PolyMatrix

    @property
    def m(self) -> int:
        return self.ideal.num_gens

    def is_syzygy_matrix(self) -> bool:
        """Each column maps to zero under E_i -> t^e_i."""
        for c in range(self.matrix.cols):
            total = Polynomial()
            for r, entry in self.matrix.column(c).items():
                total = total + entry * t_power(self.ideal.gens[r])
            if not total.is_zero():
                return False
        return True


def pair_degrees(ideal: RelativeIdeal, i: int, j: int) -> tuple[int, ...]:
    """Minimal generators of (e_i + S) intersected with (e_j + S)."""
    semigroup = ideal.semigroup
    first = principal(semigroup, ideal.gens[i])
    second = principal(semigroup, ideal.gens[j])
    return rel_intersection(first, second).gens


def _redundant(ideal: RelativeIdeal, degrees: dict, relation: Relation) -> bool:
    """The relation (i, j, d) is a combination of relations through a third generator."""
    i, j, d = relation
    semigroup = ideal.semigroup
    for k in range(ideal.num_gens):
        if k in (i, j) or d - ideal.gens[k] not in semigroup:
            continue
        if d not in degrees[min(i, k), max(i, k)] and d not in degrees[min(k, j), max(k, j)]:
            return True
    return False


def presentation_semigroup(ideal: RelativeIdeal, prune: bool = False) -> SemigroupPresentation:
    """Pairwise relations of the minimal monomial generators of I.

    With prune=True a relation of degree d is dropped when some t^e_k divides t^d and d is
    a non-minimal degree for both (i, k) and (k, j); the column module does not change.
    """
    require_ideal(ideal)
    m = ideal.num_gens
    degrees = {(i, j): pair_degrees(ideal, i, j) for i, j in combinations(range(m), 2)}
    relations = [(i, j, d) for (i, j), ds in degrees.items() for d in ds]
    if prune:
        kept = [r for r in relations if not _redundant(ideal, degrees, r)]
        logger.debug(f"Pruned {len(relations) - len(kept)} of {len(relations)} relations")
        relations = kept

    entries = {}
    for c, (i, j, d) in enumerate(relations):
        entries[(i, c)] = t_power(d - ideal.gens[i])
        entries[(j, c)] = t_power(d - ideal.gens[j], -1)
    return SemigroupPresentation(ideal, tuple(relations), PolyMatrix(m, len(relations), entries))


# ---------------------------------------------------------------------------
# Minors
# ---------------------------------------------------------------------------


def fitting_orders(
    presentation: SemigroupPresentation,
    j: int,
    budget: int | None = None,
) -> list[tuple[int, Polynomial]] | None:
    """Orders of the minimal (m - j)-minors generating Fitt_j, with one minor each.

    Returns None for the zero ideal and [(0, 1)] for the unit ideal. The minors come from
    the minimal spanning forests of the relation graph, so no order covered by a smaller
    one is ever evaluated.

    Raises:
        BudgetExceeded: If the row sets or the partial forests exceed the minor budget.
    """
    m = presentation.m
    size = m - j
    ncols = presentation.matrix.cols
    if size <= 0:
        return [(0, Polynomial.constant(1))]
    if size > ncols:
        return None

    limit = resolve_minor_budget(budget)
    if comb(m, size) > limit:
        raise BudgetExceeded(f"{size}-row sets of a {m}-row presentation", comb(m, size), limit)

    semigroup = presentation.ideal.semigroup
    gens = presentation.ideal.gens
    relations = presentation.relations
    weights = spanning_forests(
        m,
        [(a, b) for a, b, _ in relations],
        j,
        weight=lambda r, c: relations[c][2] - gens[r],
        one=0,
        multiply=operator.add,
        divides=lambda a, b: b - a in semigroup,
        grade=int,
        limit=limit,
    )

    found: list[tuple[int, Polynomial]] = []
    memo: dict = {}
    for degree in sorted(weights):
        rows, cols = witness_rows_cols(weights[degree])
        found.append((degree, minor(presentation.matrix, rows, cols, memo)))
    logger.debug(f"Fitt_{j}: {len(found)} minimal orders {[d for d, _ in found]}")
    return found or None


def fitting_ideal_semigroup(
    ideal: RelativeIdeal,
    j: int,
    budget: int | None = None,
    prune: bool = True,
) -> RelativeIdeal | None:
    """Fitt_j(I) as a relative ideal of S, None for the zero ideal."""
    if j < 0:
        raise PreconditionViolated(f"Fitting index must be non-negative, got {j}")
    orders = fitting_orders(presentation_semigroup(ideal, prune=prune), j, budget)
    if orders is None:
        return None
    return relative_ideal(ideal.semigroup, (d for d, _ in orders))


# ---------------------------------------------------------------------------
# Truncated series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedIdeal:
    """Image of an ideal of K[[t^S]] modulo t^N, as a span over the basis t^s, s < N in S."""

    semigroup: NumericalSemigroup
    bound: int
    rows: tuple[tuple[int, ...], ...]

    @cached_property
    def basis(self) -> tuple[int, ...]:
        return tuple(self.semigroup.elements_below(self.bound))

    @cached_property
    def _position(self) -> dict[int, int]:
        return {s: p for p, s in enumerate(self.basis)}

    @classmethod
    def from_generators(
        cls,
        semigroup: NumericalSemigroup,
        generators: list[Polynomial],
        bound: int,
    ) -> "TruncatedIdeal":
        """Span of f * t^s mod t^N over generators f and s in S."""
        basis = semigroup.elements_below(bound)
        position = {s: p for p, s in enumerate(basis)}
        rows: set[tuple[int, ...]] = set()
        for poly in generators:
            if poly.is_zero():
                continue
            for s in basis:
                if t_order(poly) + s >= bound:
                    break
                row = [0] * len(basis)
                for mono, coef in poly.terms:
                    exponent = mono.exponent(0) + s
                    if exponent >= bound:
                        continue
                    if exponent not in position:
                        raise ValueError(f"{poly} is not a series in K[[t^S]] for S = {semigroup}")
                    row[position[exponent]] += coef
                rows.add(tuple(row))
        return cls(semigroup, bound, tuple(sorted(rows, reverse=True)))

    def _is_coordinate(self) -> bool:
        return all(sum(1 for v in row if v) == 1 for row in self.rows)

    @cached_property
    def _echelon(self) -> tuple[int, list[int]]:
        if self._is_coordinate():
            pivots = sorted({next(p for p, v in enumerate(row) if v) for row in self.rows})
            return len(pivots), pivots
        return row_echelon(self.rows) if self.rows else (0, [])

    @property
    def rank(self) -> int:
        return self._echelon[0]

    def orders(self) -> list[int]:
        """Orders of the elements of the span: the exponents at the pivot columns."""
        return [self.basis[p] for p in self._echelon[1]]

    def contains_row(self, row: tuple[int, ...]) -> bool:
        if not any(row):
            return True
        return row_echelon(list(self.rows) + [row])[0] == self.rank

    def contains_power(self, exponent: int) -> bool:
        """t^exponent lies in the span."""
        if exponent >= self.bound:
            return True
        row = [0] * len(self.basis)
        row[self._position[exponent]] = 1
        if self._is_coordinate():
            return self._position[exponent] in self._echelon[1]
        return self.contains_row(tuple(row))

    def same_span(self, other: "TruncatedIdeal") -> bool:
        """Equal subspaces: equal ranks and the union adds nothing."""
        if self.semigroup != other.semigroup or self.bound != other.bound:
            raise ValueError("truncated ideals must share the semigroup and the bound")
        if self.rank != other.rank:
            return False
        if self._is_coordinate() and other._is_coordinate():
            return self._echelon[1] == other._echelon[1]
        return row_echelon(list(self.rows) + list(other.rows))[0] == self.rank


@dataclass(frozen=True)
class SeriesResult:
    """Fitt_1(I) from truncated series, with the verdict against an optional target."""

    ideal: RelativeIdeal
    fitting: RelativeIdeal
    bound: int
    minors: int
    equal: bool | None = None


def truncation_bound(ideal: RelativeIdeal, target: RelativeIdeal | None = None) -> int:
    """N past which both Fitt_1(I) and the target contain every power of t.

    I^(m-1) lies in Fitt_1(I), so Fitt_1(I) holds t^d for d >= (m - 1) * min(I) + c(S).
    """
    c = ideal.semigroup.conductor
    bound = (ideal.num_gens - 1) * ideal.min + c
    if target is not None:
        bound = max(bound, target.min + c)
    return bound + 1


def fitting1_series(
    ideal: RelativeIdeal,
    target: RelativeIdeal | None = None,
    budget: int | None = None,
) -> SeriesResult:
    """Fitt_1(I) from its (m - 1)-minors, compared with `target` modulo t^N.

    The tail is certified by checking that t^d lies in the span for every d in
    [N, N + e) at the larger bound N + e; adding S then covers everything past N.

    Raises:
        PreconditionViolated: If I is not an ideal of S or has fewer than two generators.
        BudgetExceeded: If the minors exceed the budget.
        InsufficientBound: If the tail cannot be certified at N.
    """
    require_ideal(ideal)
    if ideal.num_gens < 2:
        raise PreconditionViolated(f"{ideal} needs at least two generators")
    semigroup = ideal.semigroup
    presentation = presentation_semigroup(ideal, prune=True)
    orders = fitting_orders(presentation, 1, budget) or []
    minors = [value for _, value in orders]

    bound = truncation_bound(ideal, target)
    wide = bound + semigroup.multiplicity
    span = TruncatedIdeal.from_generators(semigroup, minors, wide)
    missing = [d for d in range(bound, wide) if not span.contains_power(d)]
    if missing:
        raise InsufficientBound(bound, f"t^{missing[0]} not reached by the minors")
    fitting = relative_ideal(semigroup, span.orders())

    equal = None
    if target is not None:
        if not target.is_ideal():
            equal = False
        else:
            target_span = TruncatedIdeal.from_generators(
                semigroup, [t_power(g) for g in target.gens], wide
            )
            equal = span.same_span(target_span)
    logger.debug(f"Fitt_1{ideal} over {semigroup}: {fitting} (N={bound}, {len(minors)} minors)")
    return SeriesResult(ideal, fitting, bound, len(minors), equal)

