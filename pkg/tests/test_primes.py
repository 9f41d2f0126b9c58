"""Tests for src/ideals/primes.py and src/ideals/betti.py."""

import itertools

import pytest
from hypothesis import given, settings

from src.algebra.monomial import Monomial
from src.cli.suites import squarefree_ideals
from src.errors import BudgetExceeded, PreconditionViolated
from src.fitting.verification import chordal_criterion
from src.ideals.betti import (
    betti_pd,
    is_cohen_macaulay,
    is_perfect_grade2,
    lcm_lattice,
    projective_dimension,
    strand_homology,
)
from src.ideals.monomial_ideal import unit_ideal
from src.ideals.primes import (
    height,
    height_and_grade,
    is_unmixed,
    min_sets,
    minimal_primes,
    minimal_transversals,
)
from tests.strategies import ideal_of, small_ideals

# ---------------------------------------------------------------------------
# Minimal primes
# ---------------------------------------------------------------------------


def test_min_sets_keeps_inclusion_minimal():
    family = [frozenset({1, 2}), frozenset({1}), frozenset({2, 3}), frozenset({1, 3})]
    assert min_sets(family) == [frozenset({1}), frozenset({2, 3})]


def test_minimal_transversals_of_triangle():
    edges = [frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})]
    assert sorted(map(sorted, minimal_transversals(edges))) == [[0, 1], [0, 2], [1, 2]]
    assert minimal_transversals([]) == [frozenset()]


def test_minimal_primes_sorted_by_size(worked_ideal):
    assert minimal_primes(worked_ideal) == [frozenset({0}), frozenset({1, 2})]
    assert height(worked_ideal) == 1
    assert height_and_grade(worked_ideal) == (1, 1)


def test_height_uses_radical():
    assert height(ideal_of(3, (2, 0, 0), (0, 3, 0))) == 2


def test_unmixed(triangle_ideal, worked_ideal):
    assert is_unmixed(triangle_ideal)
    assert not is_unmixed(worked_ideal)


def test_unmixed_needs_radical_ideal():
    with pytest.raises(PreconditionViolated):
        is_unmixed(ideal_of(2, (2, 0)))


def test_minimal_primes_need_proper_nonzero(ring3):
    with pytest.raises(PreconditionViolated):
        minimal_primes(unit_ideal(ring3))


# ---------------------------------------------------------------------------
# Betti numbers
# ---------------------------------------------------------------------------


def test_lcm_lattice(worked_ideal):
    lattice = lcm_lattice(worked_ideal)
    assert lattice[-1] == Monomial.product_of([0, 1, 2])
    assert len(lattice) == 3
    with pytest.raises(BudgetExceeded):
        lcm_lattice(worked_ideal, budget=1)


def test_strand_homology_at_top_degree(triangle_ideal):
    assert strand_homology(triangle_ideal, Monomial.product_of([0, 1, 2])) == {2: 2}
    assert strand_homology(triangle_ideal, Monomial.product_of([0, 1])) == {1: 1}


def test_betti_of_worked_example(worked_ideal):
    table, pd = betti_pd(worked_ideal)
    assert table.totals() == {0: 1, 1: 2, 2: 1}
    assert pd == 2
    assert not is_cohen_macaulay(worked_ideal)
    assert not is_perfect_grade2(worked_ideal)


def test_triangle_is_perfect_of_grade_two(triangle_ideal):
    table, pd = betti_pd(triangle_ideal)
    assert table.totals() == {0: 1, 1: 3, 2: 2}
    assert pd == 2
    assert is_cohen_macaulay(triangle_ideal)
    assert is_perfect_grade2(triangle_ideal)


def test_koszul_betti_numbers(maximal3):
    table, pd = betti_pd(maximal3)
    assert table.totals() == {0: 1, 1: 3, 2: 3, 3: 1}
    assert pd == 3


def test_four_cycle_is_not_cohen_macaulay():
    c4 = ideal_of(4, (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1))
    assert height(c4) == 2
    assert projective_dimension(c4) == 3
    assert not is_perfect_grade2(c4)


def test_betti_needs_proper_nonzero(ring3):
    with pytest.raises(PreconditionViolated):
        betti_pd(unit_ideal(ring3))


# ---------------------------------------------------------------------------
# Invariants over random ideals
# ---------------------------------------------------------------------------


def _minimal_primes_by_subsets(ideal) -> set[frozenset[int]]:
    """Inclusion-minimal variable sets meeting the support of every generator."""
    hitting = [
        frozenset(subset)
        for size in range(1, ideal.ring.nvars + 1)
        for subset in itertools.combinations(range(ideal.ring.nvars), size)
        if all(g.support & frozenset(subset) for g in ideal.gens)
    ]
    return {t for t in hitting if not any(other < t for other in hitting)}


@settings(max_examples=60, deadline=None)
@given(small_ideals)
def test_minimal_primes_match_subset_scan(ideal):
    assert set(minimal_primes(ideal)) == _minimal_primes_by_subsets(ideal)
    assert height(ideal) == min(len(t) for t in _minimal_primes_by_subsets(ideal))


@settings(max_examples=40, deadline=None)
@given(small_ideals)
def test_projective_dimension_bounds(ideal):
    """height(I) <= pd(S/I) <= number of variables."""
    pd = projective_dimension(ideal)
    assert height(ideal) <= pd <= ideal.ring.nvars
    assert is_cohen_macaulay(ideal) == (pd == height(ideal))


def test_perfect_grade_two_matches_chordal_complement_on_four_variables():
    checked = 0
    for ideal in squarefree_ideals(4, 4):
        if height(ideal) != 2 or not is_unmixed(ideal):
            continue
        assert is_perfect_grade2(ideal) == chordal_criterion(ideal), ideal
        checked += 1
    assert checked > 5
