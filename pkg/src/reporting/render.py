"""JSON and fixed-width text rendering of reports."""

import json
from collections.abc import Sequence

from pydantic import BaseModel

from .models import FittingReport, SearchReport, SuiteResult


def render_json(model: BaseModel | Sequence[BaseModel]) -> str:
    """Stable JSON: field aliases, None fields dropped, keys sorted."""
    if isinstance(model, BaseModel):
        data = model.model_dump(mode="json", by_alias=True, exclude_none=True)
    else:
        data = [m.model_dump(mode="json", by_alias=True, exclude_none=True) for m in model]
    return json.dumps(data, indent=2, sort_keys=True)


def render_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    """Left-aligned columns padded to the widest cell."""
    cells = [[str(h) for h in headers]] + [[str(v) for v in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths, strict=True)).rstrip()
             for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_reports(reports: Sequence[FittingReport]) -> str:
    rows = [
        (r.statement, r.instance, "pass" if r.passed else "FAIL", "; ".join(r.notes))
        for r in reports
    ]
    return render_table(["statement", "instance", "result", "notes"], rows)


def render_suite(result: SuiteResult) -> str:
    s = result.summary
    lines = [
        f"suite {s.suite}: {s.instances} instances, {s.passed} passed, "
        f"{s.failed} failed, {s.skipped} skipped"
    ]
    lines.extend(f"note: {n}" for n in s.notes)
    for failure in result.failures:
        witness = failure.witness
        lines.append(f"FAIL {failure.statement} on {failure.instance}: {witness.detail}")
        lines.append(f"  reproduce: {witness.command}")
    return "\n".join(lines)


def render_search(report: SearchReport) -> str:
    lines = [
        f"genus <= {report.max_genus}: {report.semigroups} semigroups, "
        f"{report.non_gorenstein} non-Gorenstein",
        f"{len(report.hits)} hits",
        f"type 2 checked: {report.type2_checked}, failures: {len(report.type2_failures)}",
        f"radical mismatches: {len(report.radical_failures)} of {report.radical_checked} checked",
        "decided by: " + ", ".join(f"{k}={v}" for k, v in report.decided_by.items()),
    ]
    if report.non_gorenstein and not report.radical_checked:
        lines.append("radical check not exercised: no Fitt_1(omega) came from minors")
    if report.hits:
        rows = [(h.semigroup, h.type, h.omega_gens, h.fitt1_gens) for h in report.hits]
        lines.append(render_table(["semigroup", "type", "omega", "fitt1"], rows))
    if report.skipped:
        lines.append(f"skipped (budget): {[h.semigroup for h in report.skipped]}")
    return "\n".join(lines)
