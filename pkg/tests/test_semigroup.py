"""Tests for src/semigroups/semigroup.py and src/semigroups/relative_ideal.py."""

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import PreconditionViolated
from src.semigroups.relative_ideal import (
    as_ideal,
    canonical_ideal,
    ideal_equal_up_to_shift,
    is_trace_ideal,
    maximal_ideal,
    principal,
    rel_colon,
    rel_contains,
    rel_intersection,
    rel_inverse,
    rel_power,
    rel_product,
    rel_shift,
    rel_sum,
    rel_trace,
    relative_ideal,
    require_ideal,
    shift_into,
)
from src.semigroups.semigroup import NumericalSemigroup, enumerate_semigroups

# ---------------------------------------------------------------------------
# Invariants
# ---------------------------------------------------------------------------


def test_invariants_of_345(s345):
    inv = s345.invariants()
    assert inv.frobenius == 2
    assert inv.conductor == 3
    assert inv.gaps == (1, 2)
    assert inv.genus == 2
    assert inv.multiplicity == 3
    assert inv.apery == (0, 4, 5)
    assert inv.pseudo_frobenius == (1, 2)
    assert inv.type == 2
    assert not inv.is_symmetric


def test_invariants_of_45(s45):
    assert s45.frobenius == 11
    assert s45.genus == 6
    assert s45.gaps == (1, 2, 3, 6, 7, 11)
    assert s45.invariants().is_symmetric
    assert s45.is_gorenstein()


def test_generators_are_minimalized():
    assert NumericalSemigroup((3, 4, 5, 6, 7)).minimal_generators == (3, 4, 5)
    assert NumericalSemigroup((5, 2)) == NumericalSemigroup((2, 5))


def test_non_numerical_generators_rejected():
    with pytest.raises(ValueError):
        NumericalSemigroup((4, 6))
    with pytest.raises(ValueError):
        NumericalSemigroup((0, 3))
    with pytest.raises(ValueError):
        NumericalSemigroup(())


def test_whole_line():
    naturals = NumericalSemigroup((1,))
    assert naturals.conductor == 0
    assert naturals.frobenius == -1
    assert naturals.gaps == ()
    assert naturals.type == 1
    assert 0 in naturals and -1 not in naturals


def test_from_gaps(s345):
    assert NumericalSemigroup.from_gaps([1, 2]) == s345
    assert NumericalSemigroup.from_gaps([1, 3]) == NumericalSemigroup((2, 5))


def test_apery_set_other_modulus(s345):
    assert s345.apery_set(5) == (0, 6, 7, 3, 4)
    with pytest.raises(ValueError):
        s345.apery_set(2)


def test_genus_counts():
    """Number of numerical semigroups of each genus, 0 through 9."""
    counts = Counter(s.genus for s in enumerate_semigroups(9))
    assert [counts[g] for g in range(10)] == [1, 1, 2, 4, 7, 12, 23, 39, 67, 118]


def test_enumeration_order_and_pruning():
    first = list(enumerate_semigroups(2))
    assert [s.minimal_generators for s in first] == [(1,), (2, 3), (2, 5), (3, 4, 5)]
    two = list(enumerate_semigroups(4, max_multiplicity=2))
    assert [s.minimal_generators for s in two] == [(1,), (2, 3), (2, 5), (2, 7), (2, 9)]
    assert all(s.conductor <= 4 for s in enumerate_semigroups(6, max_conductor=4))


# ---------------------------------------------------------------------------
# Relative ideals
# ---------------------------------------------------------------------------


def test_relative_ideal_minimal_generators(s45):
    ideal = relative_ideal(s45, [12, 13, 16, 17, 19])
    assert ideal.gens == (12, 13, 19)
    assert 21 in ideal and 14 not in ideal
    assert ideal.is_proper()
    with pytest.raises(ValueError):
        relative_ideal(s45, [])


def test_canonical_ideal_and_trace_of_345(s345):
    omega = canonical_ideal(s345)
    assert omega.gens == (0, 1)
    assert rel_inverse(omega).gens == (3, 4, 5)
    assert rel_trace(omega).gens == (3, 4, 5)


def test_canonical_ideal_of_gorenstein_is_principal(s45):
    assert canonical_ideal(s45).is_principal()


def test_inverse_and_trace_in_25(s25):
    j1 = relative_ideal(s25, [0, 1])
    assert rel_inverse(j1).gens == (4, 5)
    assert rel_trace(j1).gens == (4, 5)
    j3 = relative_ideal(s25, [0, 3])
    assert rel_inverse(j3).gens == (2, 5)
    assert rel_trace(j3).gens == (2, 5)
    assert is_trace_ideal(relative_ideal(s25, [4, 5]))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_shift_into_multiplicity_two(k):
    semigroup = NumericalSemigroup((2, 2 * k + 1))
    for i in range(1, k + 1):
        fractional = relative_ideal(semigroup, [0, 2 * i - 1])
        assert shift_into(semigroup, fractional) == 2 * k + 2 - 2 * i
        assert as_ideal(fractional).gens == (2 * k + 2 - 2 * i, 2 * k + 1)


def test_pair_intersection_in_45(s45):
    first, second = principal(s45, 12), principal(s45, 13)
    assert rel_intersection(first, second).gens == (17, 28)


def test_sum_product_power_and_colon(s45):
    m = maximal_ideal(s45)
    assert rel_sum(principal(s45, 8), principal(s45, 5)).gens == (5, 8)
    assert rel_product(m, m).gens == (8, 9, 10)
    assert rel_power(m, 0) == principal(s45, 0)
    assert rel_power(m, 2) == rel_product(m, m)
    assert rel_colon(m, m).gens == (0, 11)
    assert rel_contains(m, rel_product(m, m))
    assert not rel_contains(rel_product(m, m), m)


def test_equal_up_to_shift_direction(s25):
    """The returned a satisfies second = a + first."""
    first = relative_ideal(s25, [0, 1])
    second = relative_ideal(s25, [4, 5])
    assert ideal_equal_up_to_shift(first, second) == 4
    assert ideal_equal_up_to_shift(second, first) == -4
    assert rel_shift(first, 4) == second
    assert ideal_equal_up_to_shift(first, relative_ideal(s25, [0, 3])) is None
    assert ideal_equal_up_to_shift(first, principal(s25, 2)) is None


def test_require_ideal(s25):
    with pytest.raises(PreconditionViolated):
        require_ideal(relative_ideal(s25, [0, 1]))
    require_ideal(relative_ideal(s25, [4, 5]))


def test_mixed_semigroups_rejected(s25, s45):
    with pytest.raises(ValueError):
        rel_sum(principal(s25), principal(s45))


# ---------------------------------------------------------------------------
# Colon ideals against a window scan
# ---------------------------------------------------------------------------

semigroups = st.sampled_from([(2, 5), (3, 4, 5), (4, 5), (3, 5, 7)]).map(NumericalSemigroup)
generator_sets = st.lists(st.integers(-3, 9), min_size=1, max_size=3)


@settings(max_examples=60, deadline=None)
@given(semigroups, generator_sets, generator_sets)
def test_colon_is_the_largest_set_moved_inside(semigroup, first_gens, second_gens):
    """(E : F) + F lies in E, and every z with z + F inside E belongs to (E : F)."""
    first = relative_ideal(semigroup, first_gens)
    second = relative_ideal(semigroup, second_gens)
    quotient = rel_colon(first, second)
    assert rel_contains(first, rel_product(quotient, second))
    c = semigroup.conductor
    lo = first.min - max(second.gens) - c - 2
    hi = first.min - second.min + c + 2
    for z in range(lo, hi):
        moved_inside = all(z + f in first for f in second.gens)
        assert (z in quotient) == moved_inside
