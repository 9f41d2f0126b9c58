"""Taylor presentations of monomial ideals."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from ..algebra.matrix import PolyMatrix
from ..algebra.monomial import Monomial
from ..algebra.polynomial import ZERO, Polynomial
from ..ideals.monomial_ideal import MonomialIdeal, PolynomialRing, minimalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Presentation:
    """Relation matrix of an ideal with respect to a chosen generating list.

    Row i belongs to generator_order[i]; column c is the Taylor relation of the pair
    pairs[c], with degree lcms[c].
    """

    ideal: MonomialIdeal
    matrix: PolyMatrix
    generator_order: tuple[Monomial, ...]
    pairs: tuple[tuple[int, int], ...]
    lcms: tuple[Monomial, ...]

    @property
    def m(self) -> int:
        return len(self.generator_order)

    def is_syzygy_matrix(self) -> bool:
        """Every column c satisfies sum_i c_i * u_i = 0."""
        gens = [Polynomial.from_monomial(u) for u in self.generator_order]
        for col in range(self.matrix.cols):
            total = ZERO
            for row, value in self.matrix.column(col).items():
                total = total + value * gens[row]
            if not total.is_zero():
                return False
        return True


def taylor_pairs(
    generators: Sequence[Monomial], prune: bool = False
) -> list[tuple[int, int, Monomial]]:
    """Generator pairs (i, j, lcm) whose Taylor relations are kept.

    With prune=True, the relation of (i, j) is dropped when some u_k divides lcm(u_i, u_j)
    while lcm(u_i, u_k) and lcm(u_k, u_j) both differ from it: the dropped relation is a
    combination of relations of strictly smaller degree.
    """
    pairs = []
    for i, j in combinations(range(len(generators)), 2):
        joined = generators[i].lcm(generators[j])
        if prune and any(
            k not in (i, j)
            and generators[k].divides(joined)
            and generators[i].lcm(generators[k]) != joined
            and generators[k].lcm(generators[j]) != joined
            for k in range(len(generators))
        ):
            continue
        pairs.append((i, j, joined))
    return pairs


def presentation_of_generators(
    ring: PolynomialRing,
    generators: Sequence[Monomial],
    prune: bool = False,
) -> Presentation:
    """Taylor presentation for an arbitrary, possibly redundant, list of monomials."""
    order = tuple(generators)
    kept = taylor_pairs(order, prune)
    entries = {}
    for col, (i, j, joined) in enumerate(kept):
        entries[(i, col)] = Polynomial.from_monomial(joined.quotient(order[i]))
        entries[(j, col)] = Polynomial.from_monomial(joined.quotient(order[j]), -1)
    matrix = PolyMatrix(len(order), len(kept), entries)
    if prune:
        total = len(order) * (len(order) - 1) // 2
        logger.debug(f"Pruned Taylor presentation keeps {len(kept)} of {total} relations")
    return Presentation(
        ideal=minimalize(ring, order),
        matrix=matrix,
        generator_order=order,
        pairs=tuple((i, j) for i, j, _ in kept),
        lcms=tuple(joined for _, _, joined in kept),
    )


def taylor_presentation(ideal: MonomialIdeal, prune: bool = False) -> Presentation:
    """Presentation of I on its minimal generators, one column per kept generator pair."""
    return presentation_of_generators(ideal.ring, ideal.gens, prune)
