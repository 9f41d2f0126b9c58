"""Multigraded Betti numbers of S/I from Koszul strands over the lcm lattice."""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from ..algebra.matrix import rational_rank
from ..algebra.monomial import Monomial
from ..config import resolve_budget
from ..errors import BudgetExceeded, PreconditionViolated
from .monomial_ideal import MonomialIdeal, membership
from .primes import height

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers beta_{i,a}(S/I)."""

    entries: dict[tuple[int, Monomial], int] = field(default_factory=dict)

    def totals(self) -> dict[int, int]:
        """beta_i summed over multidegrees."""
        result: dict[int, int] = {}
        for (i, _), value in self.entries.items():
            result[i] = result.get(i, 0) + value
        return dict(sorted(result.items()))

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)


def lcm_lattice(ideal: MonomialIdeal, budget: int | None = None) -> list[Monomial]:
    """All lcms of nonempty subsets of the minimal generators, in canonical order."""
    limit = resolve_budget(budget)
    lattice = set(ideal.gens)
    frontier = set(ideal.gens)
    while frontier:
        fresh = set()
        for a in frontier:
            for g in ideal.gens:
                joined = a.lcm(g)
                if joined not in lattice:
                    fresh.add(joined)
        lattice |= fresh
        if len(lattice) > limit:
            raise BudgetExceeded("lcm-lattice multidegrees", len(lattice), limit)
        frontier = fresh
    return sorted(lattice, key=Monomial.sort_key)


def strand_homology(ideal: MonomialIdeal, degree: Monomial) -> dict[int, int]:
    """Homology dimensions of the Koszul complex of S/I in one multidegree.

    The basis element for a variable set F exists iff F lies in the support of the degree
    and x^(degree - F) is not in I; the differential has entries +-1.
    """
    support = sorted(degree.support)
    basis: dict[int, list[tuple[int, ...]]] = {}
    for size in range(len(support) + 1):
        basis[size] = [
            face
            for face in combinations(support, size)
            if not membership(ideal, degree.quotient(Monomial.product_of(face)))
        ]

    ranks: dict[int, int] = {}
    for size in range(1, len(support) + 1):
        sources, targets = basis[size], basis[size - 1]
        if not sources or not targets:
            continue
        row_of = {face: r for r, face in enumerate(targets)}
        matrix = [[0] * len(sources) for _ in targets]
        for c, face in enumerate(sources):
            for position in range(len(face)):
                r = row_of.get(face[:position] + face[position + 1 :])
                if r is not None:
                    matrix[r][c] = -1 if position % 2 else 1
        ranks[size] = rational_rank(matrix)

    homology = {}
    for size, elements in basis.items():
        dim = len(elements) - ranks.get(size, 0) - ranks.get(size + 1, 0)
        if dim:
            homology[size] = dim
    return homology


@lru_cache(maxsize=4096)
def _betti(ideal: MonomialIdeal, budget: int) -> BettiTable:
    entries: dict[tuple[int, Monomial], int] = {(0, Monomial.one()): 1}
    for degree in lcm_lattice(ideal, budget):
        for i, value in strand_homology(ideal, degree).items():
            entries[(i, degree)] = value
    return BettiTable(entries)


def betti_pd(ideal: MonomialIdeal, budget: int | None = None) -> tuple[BettiTable, int]:
    """Multigraded Betti table of S/I and pd(S/I).

    Raises:
        PreconditionViolated: If I is zero or the unit ideal.
        BudgetExceeded: If the lcm lattice has more elements than the budget.
    """
    if not ideal.is_proper_nonzero():
        raise PreconditionViolated(f"Betti numbers need a proper nonzero ideal, got {ideal}")
    table = _betti(ideal, resolve_budget(budget))
    return table, table.projective_dimension


def projective_dimension(ideal: MonomialIdeal, budget: int | None = None) -> int:
    return betti_pd(ideal, budget)[1]


def is_cohen_macaulay(ideal: MonomialIdeal, budget: int | None = None) -> bool:
    """S/I is Cohen-Macaulay iff pd(S/I) = height(I)."""
    return projective_dimension(ideal, budget) == height(ideal)


def is_perfect_grade2(ideal: MonomialIdeal, budget: int | None = None) -> bool:
    return height(ideal) == 2 and projective_dimension(ideal, budget) == 2
