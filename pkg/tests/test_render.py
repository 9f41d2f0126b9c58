"""Tests for src/reporting/models.py and src/reporting/render.py."""

import json

import pytest
from pydantic import ValidationError

from src.reporting.models import (
    FittingReport,
    SearchHit,
    SearchReport,
    SuiteResult,
    SuiteSummary,
    Witness,
)
from src.reporting.render import (
    render_json,
    render_reports,
    render_search,
    render_suite,
    render_table,
)


@pytest.fixture
def failing_report() -> FittingReport:
    return FittingReport(
        statement="containment",
        instance="vars: x; gens: x",
        passed=False,
        witness=Witness(detail="Fitt_1 misses x", command="fitt compute --j 1", values={"j": 1}),
    )


# ---------------------------------------------------------------------------
# Models
# ---------------------------------------------------------------------------


def test_pass_alias():
    report = FittingReport.model_validate({"statement": "s", "instance": "i", "pass": True})
    assert report.passed
    data = json.loads(render_json(report))
    assert data["pass"] is True
    assert "witness" not in data


def test_failure_needs_a_witness():
    with pytest.raises(ValidationError, match="carries no witness"):
        FittingReport(statement="s", instance="i", passed=False)


def test_render_json_of_a_list(failing_report):
    data = json.loads(render_json([failing_report, failing_report]))
    assert len(data) == 2
    assert data[0]["witness"]["command"] == "fitt compute --j 1"


# ---------------------------------------------------------------------------
# Text
# ---------------------------------------------------------------------------


def test_render_table():
    assert render_table(["a", "bb"], [(1, "x")]) == "a  bb\n-  --\n1  x"


def test_render_reports(failing_report):
    text = render_reports([failing_report])
    assert "FAIL" in text.splitlines()[2]


def test_render_suite(failing_report):
    result = SuiteResult(
        summary=SuiteSummary(
            suite="containment", instances=3, passed=2, failed=1, notes=["sampled"]
        ),
        failures=[failing_report],
    )
    lines = render_suite(result).splitlines()
    assert lines[0] == "suite containment: 3 instances, 2 passed, 1 failed, 0 skipped"
    assert lines[1] == "note: sampled"
    assert lines[2] == "FAIL containment on vars: x; gens: x: Fitt_1 misses x"
    assert lines[3] == "  reproduce: fitt compute --j 1"


def test_render_search():
    hit = SearchHit(
        semigroup=[3, 4, 5], type=2, hit=True, fitt1_gens=[3, 4], omega_gens=[0, 1],
        decided_by="minors",
    )
    report = SearchReport(
        max_genus=3, semigroups=8, non_gorenstein=3, decided_by={"gorenstein": 5}
    )
    text = render_search(report)
    assert text.splitlines()[0] == "genus <= 3: 8 semigroups, 3 non-Gorenstein"
    assert "0 hits" in text
    assert "decided by: gorenstein=5" in text
    assert "radical mismatches: 0 of 0 checked" in text
    assert "radical check not exercised" in text
    report.radical_checked = 1
    assert "not exercised" not in render_search(report)
    report.hits.append(hit)
    report.skipped.append(hit)
    text = render_search(report)
    assert "1 hits" in text
    assert "skipped (budget): [[3, 4, 5]]" in text
