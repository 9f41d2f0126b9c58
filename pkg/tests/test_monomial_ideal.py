"""Tests for src/ideals/monomial_ideal.py."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from src.algebra.monomial import Monomial
from src.ideals.monomial_ideal import (
    PolynomialRing,
    all_variables_ideal,
    colon,
    contains,
    format_ideal,
    generator_strings,
    ideal_from_strings,
    ideal_text,
    intersection,
    is_regular_sequence,
    is_squarefree,
    membership,
    minimalize,
    monomial_localization,
    power,
    radical,
    unit_ideal,
    zero_ideal,
)
from tests.strategies import ideal_of, small_ideals

# ---------------------------------------------------------------------------
# Rings and canonical form
# ---------------------------------------------------------------------------


def test_ring_validation():
    with pytest.raises(ValueError):
        PolynomialRing(("x", "x"))
    with pytest.raises(ValueError):
        PolynomialRing(())
    with pytest.raises(ValueError):
        PolynomialRing(("1x",))
    assert PolynomialRing.standard(2).variable_names == ("x1", "x2")


def test_minimalize_drops_multiples_and_sorts(ring3):
    x1, x2 = Monomial.variable(0), Monomial.variable(1)
    ideal = minimalize(ring3, [x1 * x2, x2, x1 * x1, x2])
    assert ideal.gens == (x2, x1 * x1)
    assert ideal.num_gens == 2


def test_minimalize_rejects_foreign_variable(ring3):
    with pytest.raises(ValueError):
        minimalize(ring3, [Monomial.variable(3)])


def test_zero_and_unit(ring3):
    assert zero_ideal(ring3).is_zero()
    assert unit_ideal(ring3).is_unit()
    assert not unit_ideal(ring3).is_proper_nonzero()
    assert format_ideal(zero_ideal(ring3)) == "(0)"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def test_sum_product_and_intersection():
    a = ideal_of(2, (1, 0))
    b = ideal_of(2, (0, 1))
    assert a + b == all_variables_ideal(a.ring)
    assert a * b == ideal_of(2, (1, 1))
    assert intersection(a, b) == ideal_of(2, (1, 1))


def test_power_of_maximal_ideal():
    maximal = ideal_of(2, (1, 0), (0, 1))
    assert power(maximal, 2) == ideal_of(2, (2, 0), (1, 1), (0, 2))
    assert power(maximal, 0).is_unit()
    assert maximal**3 == ideal_of(2, (3, 0), (2, 1), (1, 2), (0, 3))


def test_colon(worked_ideal):
    x1 = ideal_of(3, (1, 0, 0))
    assert colon(worked_ideal, x1) == ideal_of(3, (0, 1, 0), (0, 0, 1))


def test_containment_and_membership(worked_ideal):
    assert Monomial.from_dict({0: 1, 1: 2}) in worked_ideal
    assert Monomial.variable(1) not in worked_ideal
    assert contains(worked_ideal, ideal_of(3, (1, 1, 1)))
    assert not contains(worked_ideal, ideal_of(3, (0, 1, 1)))


def test_mixed_rings_rejected(worked_ideal):
    with pytest.raises(ValueError):
        contains(worked_ideal, ideal_of(2, (1, 0)))


def test_radical_and_squarefree():
    ideal = ideal_of(2, (2, 1), (0, 3))
    assert radical(ideal) == ideal_of(2, (0, 1))
    assert not is_squarefree(ideal)
    assert is_squarefree(radical(ideal))


def test_localization_inverts_missing_variables(worked_ideal):
    assert monomial_localization(worked_ideal, {1, 2}) == ideal_of(3, (0, 1, 0), (0, 0, 1))
    assert monomial_localization(worked_ideal, {0}).gens == (Monomial.variable(0),)


def test_regular_sequence_by_disjoint_supports():
    assert is_regular_sequence(ideal_of(3, (2, 0, 0), (0, 1, 1)))
    assert not is_regular_sequence(ideal_of(3, (1, 1, 0), (1, 0, 1)))


# ---------------------------------------------------------------------------
# Text
# ---------------------------------------------------------------------------


def test_ideal_spec_round_trips_through_strings(worked_ideal):
    assert ideal_text(worked_ideal) == "vars: x1,x2,x3; gens: x1*x2, x1*x3"
    assert generator_strings(worked_ideal) == ["x1*x2", "x1*x3"]
    rebuilt = ideal_from_strings(worked_ideal.ring, ["x1*x3", "x1*x2", "x1*x2*x3"])
    assert rebuilt == worked_ideal
    assert str(worked_ideal) == "(x1*x2, x1*x3)"


# ---------------------------------------------------------------------------
# Invariants over random ideals
# ---------------------------------------------------------------------------

WINDOW = [Monomial.from_vector(v) for v in itertools.product(range(4), repeat=3)]


def _in_by_exponents(ideal, monomial) -> bool:
    """Componentwise comparison of exponent vectors."""
    if ideal.is_zero():
        return False
    gens = np.array([[g.exponent(i) for i in range(3)] for g in ideal.gens])
    vector = np.array([monomial.exponent(i) for i in range(3)])
    return bool(np.all(gens <= vector, axis=1).any())


@settings(max_examples=60, deadline=None)
@given(small_ideals)
def test_radical_is_idempotent_and_squarefree(ideal):
    root = radical(ideal)
    assert radical(root) == root
    assert is_squarefree(root)
    assert contains(root, ideal)


@settings(max_examples=40, deadline=None)
@given(small_ideals, small_ideals)
def test_membership_matches_exponent_comparison(first, second):
    """Membership, intersections and colons agree with a scan over a box of monomials."""
    meet = intersection(first, second)
    quotient = colon(first, second)
    for monomial in WINDOW:
        member = _in_by_exponents(first, monomial)
        assert membership(first, monomial) == member
        assert (monomial in meet) == (member and _in_by_exponents(second, monomial))
        assert (monomial in quotient) == all(
            _in_by_exponents(first, monomial * g) for g in second.gens
        )
    assert contains(first, second) == all(membership(first, g) for g in second.gens)
