"""Minimal primes, height and unmixedness of monomial ideals."""

import logging
from collections.abc import Iterable

from ..errors import PreconditionViolated
from .monomial_ideal import MonomialIdeal, is_squarefree, radical

logger = logging.getLogger(__name__)


def min_sets(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Inclusion-minimal members of a family of sets."""
    ordered = sorted(set(sets), key=len)
    kept: list[frozenset[int]] = []
    for candidate in ordered:
        if not any(existing <= candidate for existing in kept):
            kept.append(candidate)
    return kept


def minimal_transversals(edges: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Minimal hitting sets of a hypergraph, built one edge at a time.

    Each step multiplies the current transversals with the singletons of the next edge
    and keeps the inclusion-minimal results.
    """
    transversals = [frozenset()]
    for edge in edges:
        grown = set()
        for t in transversals:
            if t & edge:
                grown.add(t)
            else:
                grown.update(t | {v} for v in edge)
        transversals = min_sets(grown)
    return transversals


def _require_proper_nonzero(ideal: MonomialIdeal) -> None:
    if not ideal.is_proper_nonzero():
        raise PreconditionViolated(f"ideal {ideal} must be proper and nonzero")


def minimal_primes(ideal: MonomialIdeal) -> list[frozenset[int]]:
    """Variable sets T whose primes P_T are the minimal primes of I.

    Sorted by size, then by the sorted variable indices.
    """
    _require_proper_nonzero(ideal)
    supports = [g.support for g in radical(ideal).gens]
    primes = minimal_transversals(supports)
    return sorted(primes, key=lambda t: (len(t), sorted(t)))


def height(ideal: MonomialIdeal) -> int:
    return min(len(p) for p in minimal_primes(ideal))


def height_and_grade(ideal: MonomialIdeal) -> tuple[int, int]:
    """(height, grade); they agree because the polynomial ring is Cohen-Macaulay."""
    h = height(ideal)
    return h, h


def is_unmixed(ideal: MonomialIdeal) -> bool:
    """All minimal primes have the same size. Only defined for radical ideals."""
    if not is_squarefree(ideal):
        raise PreconditionViolated(f"unmixedness is only decided for radical ideals, got {ideal}")
    sizes = {len(p) for p in minimal_primes(ideal)}
    return len(sizes) == 1
