"""Verification suites: each runs one family of checks over enumerated or sampled instances."""

import json
import logging
import shlex
import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import partial
from itertools import permutations

import numpy as np

from ..algebra.monomial import Monomial
from ..errors import BudgetExceeded, ConfigError
from ..fitting.engine import fitting_ideal, fitting_locus_radical
from ..fitting.verification import (
    equality_report,
    structure_check,
    verify_base_change,
    verify_containment,
    verify_hilbert_burch,
    verify_hilbert_burch_converse,
    verify_maximal_ideal,
    verify_presentation_invariance,
    verify_radical,
    verify_worked_example,
)
from ..graphs.covers import (
    complete_graph_radical,
    maximal_ideal_criterion,
    neighbourhood_criterion,
    radical_fitting_formula,
    radical_variables,
)
from ..graphs.graph import Graph, all_graphs, complete, edge_ideal
from ..ideals.monomial_ideal import (
    MonomialIdeal,
    PolynomialRing,
    all_variables_ideal,
    membership,
    minimalize,
    radical,
)
from ..ideals.primes import height
from ..reporting.models import FittingReport, SuiteResult, SuiteSummary, Witness
from ..semigroups.search import (
    fixed_ideal_example,
    gorenstein_consistency,
    multiplicity_two_check,
    shifted_pairs_example,
    trace_power_containment,
    two_generated_agreement,
)
from ..semigroups.semigroup import enumerate_semigroups
from ..workers import ordered_map

logger = logging.getLogger(__name__)

SUITES = (
    "containment",
    "radical",
    "fitting-equality",
    "structure",
    "edge-formula",
    "semigroup",
    "worked-examples",
    "kn-example",
    "invariance",
    "maximal-ideal",
)

# Alternate names accepted by --suite
SUITE_ALIASES = {"noteasy": "fitting-equality", "demo-examples": "worked-examples"}


@dataclass(frozen=True)
class SuiteConfig:
    """Bounds and seed for one suite run."""

    suite: str
    max_vars: int = 4
    max_gens: int = 5
    max_degree: int = 4
    graph_vertices: int = 5
    samples: int = 200
    seed: int = 0
    budget: int | None = None
    workers: int = 1
    max_genus: int = 8
    squarefree_vars: int = 5
    squarefree_gens: int = 6
    sg_max_multiplicity: int = 4
    sg_max_conductor: int = 20

    def __post_init__(self):
        object.__setattr__(self, "suite", SUITE_ALIASES.get(self.suite, self.suite))
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        bounds = {
            "max_vars": self.max_vars,
            "max_gens": self.max_gens,
            "max_degree": self.max_degree,
            "graph_vertices": self.graph_vertices,
            "samples": self.samples,
            "workers": self.workers,
        }
        for name, value in bounds.items():
            if value <= 0:
                raise ConfigError(f"{name} must be positive, got {value}")


@dataclass
class StageResult:
    stage: str
    status: str  # "ok", "failed", "error"
    instances: int = 0
    failures: int = 0
    skipped: int = 0
    duration_seconds: float = 0.0


def log_stage(sr: StageResult) -> None:
    """Emit structured JSON log for a completed suite."""
    logger.info(
        json.dumps(
            {
                "stage": sr.stage,
                "status": sr.status,
                "instances": sr.instances,
                "failures": sr.failures,
                "skipped": sr.skipped,
                "duration_s": sr.duration_seconds,
            }
        )
    )


# ---------------------------------------------------------------------------
# Instance generation
# ---------------------------------------------------------------------------


def random_ideal(
    rng: np.random.Generator, max_vars: int, max_gens: int, max_degree: int
) -> MonomialIdeal:
    """Uniform variable and generator counts, then exponent vectors of degree 1..max_degree.

    A candidate dividing or divisible by an accepted generator is rejected and redrawn.
    """
    nvars = int(rng.integers(1, max_vars + 1))
    target = int(rng.integers(1, max_gens + 1))
    ring = PolynomialRing.standard(nvars)
    accepted: list[Monomial] = []
    for _ in range(50 * target):
        if len(accepted) == target:
            break
        vector = rng.integers(0, max_degree + 1, size=nvars)
        if not 1 <= int(vector.sum()) <= max_degree:
            continue
        candidate = Monomial.from_vector([int(v) for v in vector])
        if any(g.divides(candidate) or candidate.divides(g) for g in accepted):
            continue
        accepted.append(candidate)
    if not accepted:
        accepted.append(Monomial.variable(0))
    return minimalize(ring, accepted)


def sample_ideals(config: SuiteConfig) -> list[MonomialIdeal]:
    rng = np.random.default_rng(config.seed)
    return [
        random_ideal(rng, config.max_vars, config.max_gens, config.max_degree)
        for _ in range(config.samples)
    ]


def _canonical_antichain(masks: tuple[int, ...], nvars: int) -> tuple[int, ...]:
    """Smallest relabelling of a squarefree generating set under variable permutations."""
    best = None
    for perm in permutations(range(nvars)):
        image = tuple(
            sorted(sum(1 << perm[i] for i in range(nvars) if mask >> i & 1) for mask in masks)
        )
        if best is None or image < best:
            best = image
    return best


def squarefree_ideals(nvars: int, max_gens: int) -> Iterator[MonomialIdeal]:
    """Every squarefree monomial ideal on nvars variables with at most max_gens generators,
    one per orbit under permuting the variables."""
    subsets = sorted(range(1, 1 << nvars), key=lambda s: (bin(s).count("1"), s))
    seen: set[tuple[int, ...]] = set()
    ring = PolynomialRing.standard(nvars)

    def extend(start: int, chosen: list[int]) -> Iterator[list[int]]:
        if chosen:
            yield chosen
        if len(chosen) == max_gens:
            return
        for pos in range(start, len(subsets)):
            mask = subsets[pos]
            if all(c & mask != c for c in chosen):
                yield from extend(pos + 1, chosen + [mask])

    for chosen in extend(0, []):
        key = _canonical_antichain(tuple(chosen), nvars)
        if key in seen:
            continue
        seen.add(key)
        yield minimalize(
            ring, (Monomial.product_of(i for i in range(nvars) if m >> i & 1) for m in key)
        )


def _graded_squarefree(config: SuiteConfig) -> list[tuple[MonomialIdeal, int]]:
    """(ideal, j) with j in {2, 3} and grade(I) >= j, exhaustive up to relabelling."""
    cases = []
    for ideal in squarefree_ideals(config.squarefree_vars, config.squarefree_gens):
        grade = height(ideal)
        cases.extend((ideal, j) for j in (2, 3) if grade >= j)
    return cases


# ---------------------------------------------------------------------------
# Per-instance checks (module level so a process pool can pickle them)
# ---------------------------------------------------------------------------


def _containment_reports(ideal: MonomialIdeal, budget: int | None) -> list[FittingReport]:
    return [
        verify_containment(ideal, budget),
        verify_hilbert_burch(ideal, budget),
        verify_hilbert_burch_converse(ideal, budget),
    ]


def _radical_reports(ideal: MonomialIdeal, budget: int | None) -> list[FittingReport]:
    return [verify_radical(ideal, budget)]


def _equality_reports(case: tuple[MonomialIdeal, int], budget: int | None) -> list[FittingReport]:
    ideal, j = case
    return [equality_report(ideal, j, budget)]


def _structure_reports(case: tuple[MonomialIdeal, int], budget: int | None) -> list[FittingReport]:
    ideal, j = case
    return [structure_check(ideal, j, budget)]


def _invariance_reports(seed: int, config: SuiteConfig) -> list[FittingReport]:
    rng = np.random.default_rng([config.seed, seed])
    ideal = random_ideal(rng, config.max_vars, config.max_gens - 1 or 1, config.max_degree)
    nvars = ideal.ring.nvars
    base = ideal.gens[int(rng.integers(0, ideal.num_gens))]
    factor = Monomial.from_vector([int(v) for v in rng.integers(0, 2, size=nvars)])
    keep = frozenset(i for i in range(nvars) if rng.random() < 0.5)
    return [
        verify_presentation_invariance(ideal, base * factor, config.budget),
        verify_base_change(ideal, keep, config.budget),
    ]


def _graph_command(graph: Graph, j: int) -> str:
    return f"fitt edge-radical --graph {shlex.quote(graph.format())} --j {j} --check"


def edge_formula_report(graph: Graph, budget: int | None = None) -> FittingReport:
    """Admissible-cover formula against the locus radical and, within budget, brute force."""
    ideal = edge_ideal(graph)
    maximal = all_variables_ideal(ideal.ring)
    witness = None
    notes = []
    skipped = []

    def fail(detail: str, j: int, **values) -> None:
        nonlocal witness
        if witness is None:
            witness = Witness(
                detail=detail,
                command=_graph_command(graph, j),
                values={k: str(v) for k, v in values.items()},
            )
            logger.warning(f"edge-formula failed on {graph}: {detail}")

    for j in range(graph.m):
        formula = radical_fitting_formula(graph, j, budget)
        oracle = fitting_locus_radical(ideal, j)
        if formula != oracle:
            fail(f"formula != locus radical at j = {j}", j, formula=formula, oracle=oracle)
        try:
            brute = radical(fitting_ideal(ideal, j, budget))
            if brute != formula:
                fail(f"formula != sqrt(Fitt_{j}) by minors", j, formula=formula, minors=brute)
        except BudgetExceeded:
            logger.warning(f"edge-formula on {graph.format()}: minors over budget at j = {j}")
            skipped.append(j)
        if maximal_ideal_criterion(graph, j) != (formula == maximal):
            fail(f"maximal-ideal criterion disagrees at j = {j}", j, formula=formula)
        if neighbourhood_criterion(graph, j) != maximal_ideal_criterion(graph, j):
            fail(f"neighbourhood criterion disagrees at j = {j}", j)
        variables = {v for v in graph.vertices if membership(formula, Monomial.variable(v - 1))}
        if j > 0 and variables != set(radical_variables(graph, j)):
            fail(f"variables in the radical at j = {j} are {sorted(variables)}", j)
    if skipped:
        notes.append(f"skipped (oracle only) for j in {skipped}")
    return FittingReport(
        statement="edge-formula",
        instance=graph.format(),
        passed=witness is None,
        witness=witness,
        notes=notes,
    )


def kn_report(n: int, budget: int | None = None) -> FittingReport:
    """sqrt(Fitt_j(I(K_n))) against the closed form for every j."""
    graph = complete(n)
    ideal = edge_ideal(graph)
    witness = None
    notes = [
        f"j = {n - 1} gives the maximal ideal, not I(K_{n}): the boundary is n - 1 <= j"
    ]
    skipped = []
    for j in range(graph.m + 1):
        expected = complete_graph_radical(n, j)
        try:
            computed = radical(fitting_ideal(ideal, j, budget))
            source = "minors"
        except BudgetExceeded:
            logger.warning(f"K{n}: minors over budget at j = {j}, using the locus radical")
            skipped.append(j)
            computed = fitting_locus_radical(ideal, j)
            source = "locus"
        formula = radical_fitting_formula(graph, j, budget)
        if witness is None and not (computed == expected == formula):
            witness = Witness(
                detail=f"sqrt(Fitt_{j}(I(K_{n}))) = {computed} ({source}), table {expected}",
                command=_graph_command(graph, j),
                values={"formula": str(formula)},
            )
    if skipped:
        notes.append(f"skipped (oracle only) for j in {skipped}")
    return FittingReport(
        statement="kn-example",
        instance=f"K{n}",
        passed=witness is None,
        witness=witness,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def _fan_out(func: Callable, items: list, config: SuiteConfig) -> list[FittingReport]:
    return [r for batch in ordered_map(func, items, config.workers) for r in batch]


def _semigroup_reports(config: SuiteConfig) -> list[FittingReport]:
    reports = [gorenstein_consistency(config.max_genus)]
    semigroups = list(
        enumerate_semigroups(
            config.sg_max_conductor,
            max_multiplicity=config.sg_max_multiplicity,
            max_conductor=config.sg_max_conductor,
        )
    )
    check = partial(two_generated_agreement, extra=4, budget=config.budget)
    reports.extend(ordered_map(check, semigroups, config.workers))
    small = [s for s in semigroups if s.multiplicity <= 3 and s.conductor <= 10]
    reports.extend(trace_power_containment(s, s.conductor + 3, 4, config.budget) for s in small)
    reports.extend(multiplicity_two_check(k, config.budget) for k in range(1, 6))
    return reports


def _containment_suite(config: SuiteConfig) -> list[FittingReport]:
    check = partial(_containment_reports, budget=config.budget)
    return _fan_out(check, sample_ideals(config), config)


def _radical_suite(config: SuiteConfig) -> list[FittingReport]:
    check = partial(_radical_reports, budget=config.budget)
    return _fan_out(check, sample_ideals(config), config)


def _equality_suite(config: SuiteConfig) -> list[FittingReport]:
    check = partial(_equality_reports, budget=config.budget)
    return _fan_out(check, _graded_squarefree(config), config)


def _structure_suite(config: SuiteConfig) -> list[FittingReport]:
    check = partial(_structure_reports, budget=config.budget)
    return _fan_out(check, _graded_squarefree(config), config)


def _invariance_suite(config: SuiteConfig) -> list[FittingReport]:
    seeds = list(range(min(config.samples, 100)))
    return _fan_out(partial(_invariance_reports, config=config), seeds, config)


def _maximal_ideal_suite(config: SuiteConfig) -> list[FittingReport]:
    return [verify_maximal_ideal(n, config.budget) for n in range(1, config.max_vars + 2)]


def _edge_formula_suite(config: SuiteConfig) -> list[FittingReport]:
    graphs = list(all_graphs(config.graph_vertices, min_vertices=2))
    check = partial(edge_formula_report, budget=config.budget)
    return list(ordered_map(check, graphs, config.workers))


def _kn_suite(config: SuiteConfig) -> list[FittingReport]:
    return [kn_report(n, config.budget) for n in (3, 4, 5)]


def _worked_examples_suite(config: SuiteConfig) -> list[FittingReport]:
    reports = [verify_worked_example(config.budget)]
    reports.extend(shifted_pairs_example(k, config.budget) for k in range(1, 6))
    reports.append(fixed_ideal_example(config.budget))
    return reports


_SUITE_RUNNERS: dict[str, Callable[[SuiteConfig], list[FittingReport]]] = {
    "containment": _containment_suite,
    "radical": _radical_suite,
    "fitting-equality": _equality_suite,
    "structure": _structure_suite,
    "edge-formula": _edge_formula_suite,
    "semigroup": _semigroup_reports,
    "worked-examples": _worked_examples_suite,
    "kn-example": _kn_suite,
    "invariance": _invariance_suite,
    "maximal-ideal": _maximal_ideal_suite,
}

_SUITE_NOTES = {
    "kn-example": [
        "the printed table puts j = n - 1 in the I(K_n) range; "
        "the computed radical there is the maximal ideal"
    ],
}


def run_suite(config: SuiteConfig) -> SuiteResult:
    """Run one suite; failures are collected, budget overruns propagate."""
    start = time.monotonic()
    stage = StageResult(stage=f"suite:{config.suite}", status="ok")
    try:
        reports = _SUITE_RUNNERS[config.suite](config)
    except Exception as e:
        stage.status = "error"
        stage.duration_seconds = round(time.monotonic() - start, 2)
        logger.error(f"Suite {config.suite} failed: {e}")
        log_stage(stage)
        raise

    failures = [r for r in reports if not r.passed]
    skipped = sum(1 for r in reports if any(n.startswith("skipped") for n in r.notes))
    stage.instances = len(reports)
    stage.failures = len(failures)
    stage.skipped = skipped
    stage.status = "failed" if failures else "ok"
    stage.duration_seconds = round(time.monotonic() - start, 2)
    log_stage(stage)
    summary = SuiteSummary(
        suite=config.suite,
        instances=len(reports),
        passed=len(reports) - len(failures),
        failed=len(failures),
        skipped=skipped,
        notes=_SUITE_NOTES.get(config.suite, []),
    )
    return SuiteResult(summary=summary, failures=failures, reports=reports)
