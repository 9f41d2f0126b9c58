"""The `fitt` command line.

Exit codes: 0 success, 1 usage, parse or precondition error, 2 a check found a
counterexample, 3 a budget or truncation bound was exceeded.
"""

import argparse
import dataclasses
import logging
import sys
import time

from pydantic import BaseModel

from ..config import Settings, get_settings, set_settings
from ..errors import (
    BudgetExceeded,
    ConfigError,
    InsufficientBound,
    ParseError,
    PreconditionViolated,
)
from ..fitting.engine import fitting_ideal, fitting_locus_radical
from ..fitting.verification import classify_fitting_equality
from ..graphs.covers import radical_fitting_formula
from ..graphs.graph import edge_ideal, from_family
from ..ideals.monomial_ideal import format_ideal, generator_strings, ideal_text, radical
from ..reporting.models import (
    ClassifyResult,
    ComputeResult,
    EdgeRadicalResult,
    InvariantsResult,
    SeriesReport,
)
from ..reporting.render import (
    render_json,
    render_search,
    render_suite,
    render_table,
)
from ..semigroups.relative_ideal import canonical_ideal, rel_trace
from ..semigroups.search import conjecture_search, fixed_ideal_search
from ..semigroups.series import fitting1_series
from .parsing import parse_graph, parse_ideal, parse_rel_ideal, parse_semigroup, read_source
from .suites import SUITE_ALIASES, SUITES, StageResult, SuiteConfig, log_stage, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_BUDGET = 3


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_flags() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print JSON instead of text")
    common.add_argument("--budget", type=int, help="Work budget (default: FITT_BUDGET)")
    common.add_argument(
        "--max-minors", type=int, help="Minor budget (default: FITT_MAX_MINORS)"
    )
    common.add_argument("--workers", type=int, help="Worker processes for sweeps")
    common.add_argument("--log-level", help="Logging level (default: FITT_LOG_LEVEL)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = _Parser(prog="fitt", description="Fitting ideals of monomial ideals")
    verbs = parser.add_subparsers(dest="verb", required=True)

    compute = verbs.add_parser("compute", parents=[common], help="Fitt_j of a monomial ideal")
    compute.add_argument("--ideal", required=True, help="Ideal file or inline text")
    compute.add_argument("--j", type=int, required=True, help="Fitting index")
    compute.add_argument("--radical", action="store_true", help="Print sqrt(Fitt_j) instead")

    edge = verbs.add_parser(
        "edge-radical", parents=[common], help="sqrt(Fitt_j) of an edge ideal"
    )
    source = edge.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", help="Graph file or inline text")
    source.add_argument("--family", help="K<n>, C<n>, P<n> or S<n>")
    edge.add_argument("--j", type=int, required=True)
    edge.add_argument("--check", action="store_true", help="Compare with the oracles")

    classify = verbs.add_parser(
        "classify", parents=[common], help="The three conditions for Fitt_(j-1)(I) = I"
    )
    classify.add_argument("--ideal", required=True)
    classify.add_argument("--j", type=int, required=True)

    verify = verbs.add_parser("verify", parents=[common], help="Run a verification suite")
    verify.add_argument("--suite", required=True, choices=SUITES + tuple(SUITE_ALIASES))
    verify.add_argument("--seed", type=int, help="Sampling seed (default: FITT_SEED)")
    verify.add_argument("--samples", type=int, default=200)
    verify.add_argument("--max-vars", type=int, default=4)
    verify.add_argument("--max-gens", type=int, default=5)
    verify.add_argument("--max-degree", type=int, default=4)
    verify.add_argument("--graph-vertices", type=int, default=5)
    verify.add_argument("--max-genus", type=int, default=8)

    sg = verbs.add_parser("sg", help="Numerical semigroup rings")
    sg_verbs = sg.add_subparsers(dest="sg_verb", required=True)
    invariants = sg_verbs.add_parser("invariants", parents=[common])
    invariants.add_argument("--gens", required=True, help="Semigroup generators, e.g. 4,5")
    fitt1 = sg_verbs.add_parser("fitt1", parents=[common])
    fitt1.add_argument("--gens", required=True)
    fitt1.add_argument("--ideal", required=True, help="Ideal generators, e.g. 12,13,14,15")
    fitt1.add_argument("--target", help="Compare Fitt_1 with this ideal (default: I)")
    search = sg_verbs.add_parser("search", parents=[common])
    search.add_argument("--max-genus", type=int, help="Largest genus (default: FITT_MAX_GENUS)")
    fixed = sg_verbs.add_parser("fixed", parents=[common])
    fixed.add_argument("--gens", required=True)
    fixed.add_argument("--max-generator", type=int, help="Default: conductor + 2")
    return parser


def _apply_settings(args: argparse.Namespace) -> Settings:
    settings = get_settings()
    overrides = {
        "budget": getattr(args, "budget", None),
        "minor_budget": getattr(args, "max_minors", None),
        "workers": getattr(args, "workers", None),
        "seed": getattr(args, "seed", None),
        "max_genus": getattr(args, "max_genus", None),
        "log_level": getattr(args, "log_level", None),
    }
    overrides = {k: v for k, v in overrides.items() if v is not None}
    for key in ("budget", "minor_budget", "workers", "max_genus"):
        if key in overrides and overrides[key] <= 0:
            raise ConfigError(f"--{key.replace('_', '-')} must be positive")
    settings = dataclasses.replace(settings, **overrides)
    set_settings(settings)
    return settings


def _emit(args: argparse.Namespace, model: BaseModel, text: str) -> None:
    print(render_json(model) if args.json else text)


# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------


def _compute(args: argparse.Namespace) -> int:
    ideal = parse_ideal(read_source(args.ideal))
    fitt = fitting_ideal(ideal, args.j)
    if args.radical:
        fitt = radical(fitt)
    label = f"sqrt(Fitt_{args.j})" if args.radical else f"Fitt_{args.j}"
    result = ComputeResult(
        ideal=ideal_text(ideal),
        j=args.j,
        radical=args.radical,
        gens=generator_strings(fitt),
        text=format_ideal(fitt),
    )
    _emit(args, result, f"{label} = {result.text}")
    return EXIT_OK


def _edge_radical(args: argparse.Namespace) -> int:
    graph = parse_graph(read_source(args.graph)) if args.graph else from_family(args.family)
    formula = radical_fitting_formula(graph, args.j)
    result = EdgeRadicalResult(
        graph=graph.format(), j=args.j, gens=generator_strings(formula), text=format_ideal(formula)
    )
    lines = [f"sqrt(Fitt_{args.j}(I(G))) = {result.text}"]
    if args.check:
        ideal = edge_ideal(graph)
        result.locus_agrees = fitting_locus_radical(ideal, args.j) == formula
        lines.append(f"locus radical agrees: {result.locus_agrees}")
        try:
            result.minors_agree = radical(fitting_ideal(ideal, args.j)) == formula
            lines.append(f"minors agree: {result.minors_agree}")
        except BudgetExceeded as e:
            logger.warning(f"Brute-force minors skipped: {e}")
            lines.append("minors: skipped (oracle only)")
    _emit(args, result, "\n".join(lines))
    if result.locus_agrees is False or result.minors_agree is False:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _classify(args: argparse.Namespace) -> int:
    ideal = parse_ideal(read_source(args.ideal))
    verdict = classify_fitting_equality(ideal, args.j)
    result = ClassifyResult(
        ideal=ideal_text(ideal),
        j=args.j,
        fitting_equals_ideal=verdict.fitting_equals_ideal,
        fitting_squarefree=verdict.fitting_squarefree,
        structured=verdict.structured,
        chordal_complement=verdict.chordal_complement,
        agree=verdict.agree,
    )
    rows = [
        (f"Fitt_{args.j - 1}(I) = I", verdict.fitting_equals_ideal),
        (f"Fitt_{args.j - 1}(I) squarefree", verdict.fitting_squarefree),
        ("perfect grade 2 / complete intersection", verdict.structured),
    ]
    if verdict.chordal_complement is not None:
        rows.append(("chordal complement of minimal primes", verdict.chordal_complement))
    text = render_table(["condition", "holds"], rows)
    _emit(args, result, text)
    return EXIT_OK if verdict.agree else EXIT_COUNTEREXAMPLE


def _verify(args: argparse.Namespace) -> int:
    settings = get_settings()
    config = SuiteConfig(
        suite=args.suite,
        max_vars=args.max_vars,
        max_gens=args.max_gens,
        max_degree=args.max_degree,
        graph_vertices=args.graph_vertices,
        samples=args.samples,
        seed=settings.seed,
        workers=settings.workers,
        max_genus=args.max_genus,
    )
    result = run_suite(config)
    _emit(args, result, render_suite(result))
    return EXIT_COUNTEREXAMPLE if result.failures else EXIT_OK


def _sg_invariants(args: argparse.Namespace) -> int:
    semigroup = parse_semigroup(args.gens)
    inv = semigroup.invariants()
    result = InvariantsResult(
        semigroup=list(semigroup.minimal_generators),
        frobenius=inv.frobenius,
        conductor=inv.conductor,
        gaps=list(inv.gaps),
        genus=inv.genus,
        multiplicity=inv.multiplicity,
        apery=list(inv.apery),
        pseudo_frobenius=list(inv.pseudo_frobenius),
        type=inv.type,
        symmetric=inv.is_symmetric,
        canonical=list(canonical_ideal(semigroup).gens),
    )
    rows = [(k, v) for k, v in result.model_dump().items() if k != "semigroup"]
    _emit(args, result, f"S = {semigroup}\n" + render_table(["invariant", "value"], rows))
    return EXIT_OK


def _sg_fitt1(args: argparse.Namespace) -> int:
    semigroup = parse_semigroup(args.gens)
    ideal = parse_rel_ideal(semigroup, args.ideal)
    target = parse_rel_ideal(semigroup, args.target) if args.target else ideal
    series = fitting1_series(ideal, target=target)
    result = SeriesReport(
        semigroup=list(semigroup.minimal_generators),
        ideal=list(ideal.gens),
        fitt1_gens=list(series.fitting.gens),
        trace_gens=list(rel_trace(ideal).gens),
        bound=series.bound,
        equal=series.equal,
    )
    text = (
        f"S = {semigroup}, I = {ideal}\n"
        f"Fitt_1(I) = {series.fitting} (truncation bound {series.bound})\n"
        f"tr(I) = {rel_trace(ideal)}\n"
        f"Fitt_1(I) = {target}: {series.equal}"
    )
    _emit(args, result, text)
    return EXIT_OK


def _sg_search(args: argparse.Namespace) -> int:
    settings = get_settings()
    # --budget bounds the minors computed for each semigroup.
    budget = args.budget if args.budget is not None else args.max_minors
    start = time.monotonic()
    report = conjecture_search(settings.max_genus, budget, settings.workers)
    failures = len(report.type2_failures) + len(report.radical_failures)
    log_stage(
        StageResult(
            stage="sg-search",
            status="failed" if failures else "ok",
            instances=report.semigroups,
            failures=failures,
            skipped=len(report.skipped),
            duration_seconds=round(time.monotonic() - start, 2),
        )
    )
    _emit(args, report, render_search(report))
    if report.type2_failures or report.radical_failures:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _sg_fixed(args: argparse.Namespace) -> int:
    semigroup = parse_semigroup(args.gens)
    bound = args.max_generator or semigroup.conductor + 2
    report = fixed_ideal_search(semigroup, bound, args.max_minors)
    lines = [
        f"S = {semigroup}: {report.ideals_scanned} ideals with generators < {bound}",
        f"Fitt_1(I) = I for {len(report.fixed)}: "
        + ", ".join("(" + ", ".join(map(str, g)) + ")" for g in report.fixed),
    ]
    if report.skipped:
        lines.append(f"skipped (budget): {report.skipped}")
    _emit(args, report, "\n".join(lines))
    return EXIT_OK


_VERBS = {
    "compute": _compute,
    "edge-radical": _edge_radical,
    "classify": _classify,
    "verify": _verify,
}

_SG_VERBS = {
    "invariants": _sg_invariants,
    "fitt1": _sg_fitt1,
    "search": _sg_search,
    "fixed": _sg_fixed,
}


def run(args: argparse.Namespace) -> int:
    """Dispatch a parsed command and map library errors to exit codes."""
    try:
        settings = _apply_settings(args)
        logging.basicConfig(
            level=getattr(logging, settings.log_level, logging.INFO),
            format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            stream=sys.stderr,
        )
        handler = _SG_VERBS[args.sg_verb] if args.verb == "sg" else _VERBS[args.verb]
        return handler(args)
    except (ParseError, ConfigError, PreconditionViolated, ValueError) as e:
        print(f"fitt: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, InsufficientBound) as e:
        print(f"fitt: limit: {e}", file=sys.stderr)
        return EXIT_BUDGET


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
