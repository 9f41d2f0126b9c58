"""Tests for src/semigroups/search.py and src/workers.py."""

import pytest

from src.semigroups.relative_ideal import relative_ideal
from src.semigroups.search import (
    analyze_canonical,
    conjecture_search,
    expected_fixed_ideals,
    fitt1_command,
    fixed_ideal_example,
    fixed_ideal_search,
    gorenstein_consistency,
    multiplicity_two,
    multiplicity_two_check,
    proper_ideals,
    shifted_pairs_example,
    trace_power_containment,
    two_generated_agreement,
)
from src.semigroups.semigroup import NumericalSemigroup
from src.workers import ordered_map

# ---------------------------------------------------------------------------
# Canonical ideal search
# ---------------------------------------------------------------------------


def test_gorenstein_semigroup_is_decided_without_minors(s45):
    hit = analyze_canonical(s45)
    assert not hit.hit
    assert hit.decided_by == "gorenstein"
    assert hit.type == 1


def test_two_generated_canonical_ideal_uses_the_trace(s345):
    hit = analyze_canonical(s345)
    assert not hit.hit
    assert hit.omega_gens == [0, 1]
    assert hit.decided_by == "trace-power"
    assert hit.fitt1_gens == [3, 4, 5]


def test_search_up_to_genus_four():
    report = conjecture_search(4)
    assert report.semigroups == 15
    assert report.non_gorenstein == 7
    assert report.hits == []
    assert report.type2_failures == []
    assert report.radical_failures == []
    assert report.decided_by["gorenstein"] == 8


def test_search_up_to_genus_eight_skips_nothing():
    report = conjecture_search(8)
    assert report.skipped == []
    assert report.hits == []
    assert report.type2_failures == []
    assert report.radical_failures == []
    assert report.radical_checked == report.decided_by.get("minors", 0)
    assert "skipped" not in report.decided_by


def test_search_is_the_same_across_workers():
    serial = conjecture_search(3)
    parallel = conjecture_search(3, workers=2)
    assert serial.model_dump() == parallel.model_dump()


def test_ordered_map_keeps_input_order():
    assert list(ordered_map(abs, [-1, 2, -3])) == [1, 2, 3]
    assert list(ordered_map(abs, [-1, 2, -3], workers=2)) == [1, 2, 3]


def test_gorenstein_flags_coincide():
    assert gorenstein_consistency(6).passed


def test_gorenstein_flags_coincide_up_to_genus_eight():
    report = gorenstein_consistency(8)
    assert report.passed, report.witness


# ---------------------------------------------------------------------------
# Fixed ideals
# ---------------------------------------------------------------------------


def test_proper_ideals_of_23():
    ideals = [i.gens for i in proper_ideals(NumericalSemigroup((2, 3)), 4)]
    assert ideals == [(2,), (2, 3), (3,)]


def test_fixed_ideal_search_in_25(s25):
    report = fixed_ideal_search(s25, 7)
    assert sorted(report.fixed) == [[2, 5], [4, 5]]
    assert report.skipped == 0
    assert report.ideals_scanned > len(report.fixed)


def test_multiplicity_two_family():
    assert multiplicity_two(2) == NumericalSemigroup((2, 5))
    assert expected_fixed_ideals(2) == [[2, 5], [4, 5]]
    assert expected_fixed_ideals(3) == [[2, 7], [4, 7], [6, 7]]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_fixed_ideals_are_trace_ideals(k):
    report = multiplicity_two_check(k)
    assert report.passed, report.witness
    assert report.notes == [f"{k} ideals with Fitt_1(I) = I"]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_shifted_pairs(k):
    assert shifted_pairs_example(k).passed


def test_fixed_ideal_example():
    report = fixed_ideal_example()
    assert report.passed
    assert report.notes[0].startswith("truncation bound")


def test_trace_power_containment(s345):
    assert trace_power_containment(s345, 8).passed


def test_two_generated_ideals_match_their_trace():
    report = two_generated_agreement(NumericalSemigroup((3, 5, 7)))
    assert report.passed
    assert report.notes[0].endswith("two-generated ideals")


def test_fitt1_command(s45):
    ideal = relative_ideal(s45, [12, 13])
    target = relative_ideal(s45, [4, 5])
    assert fitt1_command(ideal, target) == "fitt sg fitt1 --gens 4,5 --ideal 12,13 --target 4,5"
    assert fitt1_command(ideal) == "fitt sg fitt1 --gens 4,5 --ideal 12,13"
