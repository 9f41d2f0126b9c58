"""Checks of the containment, radical and structure statements on monomial instances.

Failures are reported, never raised: each check returns a FittingReport whose witness
holds a `fitt compute` command reproducing the offending value.
"""

import logging
import shlex
from dataclasses import dataclass
from itertools import chain, combinations

from ..algebra.monomial import Monomial
from ..errors import PreconditionViolated
from ..graphs.chordal import is_chordal, minimal_primes_graph
from ..ideals.betti import is_perfect_grade2, projective_dimension
from ..ideals.monomial_ideal import (
    MonomialIdeal,
    PolynomialRing,
    all_variables_ideal,
    contains,
    ideal_text,
    is_regular_sequence,
    is_squarefree,
    membership,
    minimalize,
    monomial_localization,
    power,
    radical,
    zero_ideal,
)
from ..ideals.primes import height, is_unmixed, minimal_primes
from ..reporting.models import FittingReport, Witness
from .engine import fitting_ideal, fitting_ideal_of_generators

logger = logging.getLogger(__name__)


def compute_command(ideal: MonomialIdeal, j: int, radical_only: bool = False) -> str:
    """Single CLI invocation recomputing Fitt_j(I)."""
    command = f"fitt compute --ideal {shlex.quote(ideal_text(ideal))} --j {j}"
    return f"{command} --radical" if radical_only else command


class _Checks:
    """Collects sub-check outcomes for one statement and builds the report."""

    def __init__(self, statement: str, ideal: MonomialIdeal):
        self.statement = statement
        self.ideal = ideal
        self.notes: list[str] = []
        self.witness: Witness | None = None

    def check(self, ok: bool, detail: str, j: int, radical_only: bool = False, **values) -> bool:
        if not ok and self.witness is None:
            self.witness = Witness(
                detail=detail,
                command=compute_command(self.ideal, j, radical_only),
                values={k: str(v) for k, v in values.items()},
            )
            logger.warning(f"{self.statement} failed on {self.ideal}: {detail}")
        return ok

    def note(self, text: str) -> None:
        self.notes.append(text)

    def report(self) -> FittingReport:
        return FittingReport(
            statement=self.statement,
            instance=ideal_text(self.ideal),
            passed=self.witness is None,
            witness=self.witness,
            notes=self.notes,
        )


def _require_proper_nonzero(ideal: MonomialIdeal) -> None:
    if not ideal.is_proper_nonzero():
        raise PreconditionViolated(f"ideal {ideal} must be proper and nonzero")


def verify_containment(ideal: MonomialIdeal, budget: int | None = None) -> FittingReport:
    """Powers inside Fitting ideals, the ascending chain, and Fitt_j inside I at grade j + 1.

    Also checks that sqrt(Fitt_i(I)) = sqrt(I) for 1 <= i <= grade - 1, and Fitt_0(I) = 0.
    """
    _require_proper_nonzero(ideal)
    checks = _Checks("containment", ideal)
    m = ideal.num_gens
    grade = height(ideal)
    regular = is_regular_sequence(ideal)
    fitts = [fitting_ideal(ideal, j, budget) for j in range(m + 1)]

    checks.check(fitts[0] == zero_ideal(ideal.ring), "Fitt_0 is not zero", 0, fitt=fitts[0])
    checks.check(fitts[m].is_unit(), f"Fitt_{m} is not the unit ideal", m, fitt=fitts[m])
    for j in range(m):
        checks.check(
            contains(fitts[j + 1], fitts[j]),
            f"Fitt_{j} not contained in Fitt_{j + 1}",
            j,
            lower=fitts[j],
            upper=fitts[j + 1],
        )
    for j in range(1, m + 1):
        expected = power(ideal, m - j)
        checks.check(
            contains(fitts[j], expected),
            f"I^{m - j} not contained in Fitt_{j}",
            j,
            fitt=fitts[j],
            power=expected,
        )
        if regular:
            checks.check(
                fitts[j] == expected,
                f"regular sequence but Fitt_{j} != I^{m - j}",
                j,
                fitt=fitts[j],
                power=expected,
            )
    if regular:
        checks.note("regular sequence: equality with powers checked")

    j = grade - 1
    if 0 <= j < m:
        checks.check(
            contains(ideal, fitts[j]),
            f"grade {grade} but Fitt_{j} not contained in I",
            j,
            fitt=fitts[j],
        )
    root = radical(ideal)
    for i in range(1, grade):
        checks.check(
            radical(fitts[i]) == root,
            f"sqrt(Fitt_{i}) != sqrt(I) below the grade",
            i,
            radical_only=True,
            fitt_radical=radical(fitts[i]),
            ideal_radical=root,
        )
    return checks.report()


def verify_radical(ideal: MonomialIdeal, budget: int | None = None) -> FittingReport:
    """sqrt(Fitt_j(I)) = sqrt(I) = sqrt(Fitt_j(sqrt(I))) for 1 <= j <= height - 1."""
    _require_proper_nonzero(ideal)
    checks = _Checks("radical", ideal)
    h = height(ideal)
    root = radical(ideal)
    if h == 1:
        checks.note("height 1: nothing to check")
    for j in range(1, h):
        fitt_root = radical(fitting_ideal(ideal, j, budget))
        checks.check(
            fitt_root == root,
            f"sqrt(Fitt_{j}(I)) != sqrt(I)",
            j,
            radical_only=True,
            fitt_radical=fitt_root,
            ideal_radical=root,
        )
        of_root = radical(fitting_ideal(root, j, budget))
        checks.check(
            fitt_root == of_root,
            f"sqrt(Fitt_{j}(I)) != sqrt(Fitt_{j}(sqrt(I)))",
            j,
            radical_only=True,
            fitt_radical=fitt_root,
            of_radical=of_root,
        )
    return checks.report()


@dataclass(frozen=True)
class EqualityClassification:
    """The three equivalent conditions for a squarefree ideal of grade >= j.

    For j = 2 the perfection of I is also read off combinatorially: an unmixed height-2
    squarefree ideal is perfect exactly when the complement of its minimal-primes graph
    is chordal.
    """

    fitting_equals_ideal: bool
    fitting_squarefree: bool
    structured: bool
    chordal_complement: bool | None = None

    @property
    def agree(self) -> bool:
        if self.chordal_complement is not None and self.chordal_complement != self.structured:
            return False
        return self.fitting_equals_ideal == self.fitting_squarefree == self.structured

    def as_tuple(self) -> tuple[bool, bool, bool]:
        return (self.fitting_equals_ideal, self.fitting_squarefree, self.structured)


def chordal_criterion(ideal: MonomialIdeal) -> bool:
    """Unmixed of height 2 with a chordal complement of the minimal-primes graph."""
    if any(len(p) != 2 for p in minimal_primes(ideal)):
        return False
    return is_chordal(minimal_primes_graph(ideal).complement())


def _require_radical_grade(ideal: MonomialIdeal, j: int) -> int:
    _require_proper_nonzero(ideal)
    if not is_squarefree(ideal):
        raise PreconditionViolated(f"ideal {ideal} is not squarefree")
    grade = height(ideal)
    if j < 2 or grade < j:
        raise PreconditionViolated(f"need grade(I) >= j >= 2, got grade {grade} and j = {j}")
    return grade


def classify_fitting_equality(
    ideal: MonomialIdeal, j: int, budget: int | None = None
) -> EqualityClassification:
    """Evaluate, independently:

    (i) Fitt_{j-1}(I) = I; (ii) Fitt_{j-1}(I) is squarefree; (iii) for j = 2, I is perfect
    of grade 2, and for j > 2, I is generated by a regular sequence of length j.

    Raises:
        PreconditionViolated: If I is not squarefree or grade(I) < j or j < 2.
    """
    _require_radical_grade(ideal, j)
    fitt = fitting_ideal(ideal, j - 1, budget)
    chordal = None
    if j == 2:
        structured = is_perfect_grade2(ideal)
        chordal = chordal_criterion(ideal)
    else:
        structured = is_regular_sequence(ideal) and ideal.num_gens == j
    return EqualityClassification(
        fitting_equals_ideal=fitt == ideal,
        fitting_squarefree=is_squarefree(fitt),
        structured=structured,
        chordal_complement=chordal,
    )


def equality_report(ideal: MonomialIdeal, j: int, budget: int | None = None) -> FittingReport:
    checks = _Checks(f"fitting-equality (j={j})", ideal)
    verdict = classify_fitting_equality(ideal, j, budget)
    checks.check(
        verdict.agree,
        f"conditions disagree: (i, ii, iii) = {verdict.as_tuple()}",
        j - 1,
        conditions=verdict.as_tuple(),
    )
    checks.note(f"conditions (i, ii, iii) = {verdict.as_tuple()}")
    if verdict.chordal_complement is not None:
        checks.note(f"chordal complement of minimal primes: {verdict.chordal_complement}")
    return checks.report()


def _subsets(variables: range):
    return chain.from_iterable(combinations(variables, k) for k in range(len(variables) + 1))


def structure_check(ideal: MonomialIdeal, j: int, budget: int | None = None) -> FittingReport:
    """Consequences of Fitt_{j-1}(I) = I for a radical ideal of grade >= j, and the converse.

    - j = 2 and Fitt_1(I) = I: height 2 and pd(S/I) = 2.
    - Fitt_{j-1}(I) = I: I unmixed of grade j with mu(I_P) = j at every minimal prime P.
    - mu(I_P) = grade(I) = j at every monomial prime P containing I: Fitt_{j-1}(I) = I.
    """
    grade = _require_radical_grade(ideal, j)
    checks = _Checks(f"structure (j={j})", ideal)
    fitt = fitting_ideal(ideal, j - 1, budget)
    fixed = fitt == ideal

    if j == 2 and fixed:
        checks.note("Fitt_1(I) = I: checking height 2 and pd 2")
        pd = projective_dimension(ideal)
        checks.check(grade == 2 and pd == 2, "Fitt_1(I) = I but not perfect of grade 2", 1,
                     height=grade, pd=pd)

    primes = minimal_primes(ideal)
    if fixed:
        checks.note(f"Fitt_{j - 1}(I) = I: checking unmixedness and local generator counts")
        checks.check(is_unmixed(ideal) and grade == j,
                     f"Fitt_{j - 1}(I) = I but I is not unmixed of grade {j}", j - 1,
                     height=grade)
        for prime in primes:
            local = monomial_localization(ideal, prime).num_gens
            checks.check(local == j, f"mu(I_P) = {local} != {j} at P = {sorted(prime)}",
                         j - 1, prime=sorted(prime))

    containing = [
        frozenset(t)
        for t in _subsets(range(ideal.ring.nvars))
        if any(p <= frozenset(t) for p in primes)
    ]
    locally_minimal = grade == j and all(
        monomial_localization(ideal, t).num_gens == j for t in containing
    )
    if locally_minimal:
        checks.note(
            f"mu(I_P) = {j} at every containing monomial prime: expecting Fitt_{j - 1} = I"
        )
        checks.check(fixed, f"locally {j}-generated of grade {j} but Fitt_{j - 1}(I) != I",
                     j - 1, fitt=fitt)
    return checks.report()


def verify_maximal_ideal(nvars: int, budget: int | None = None) -> FittingReport:
    """Fitt_j(m) = m^(n-j) for 1 <= j <= n, and Fitt_j(m) = m exactly when j = n - 1."""
    ring = PolynomialRing.standard(nvars)
    maximal = all_variables_ideal(ring)
    checks = _Checks("maximal-ideal", maximal)
    for j in range(1, nvars + 1):
        fitt = fitting_ideal(maximal, j, budget)
        checks.check(fitt == power(maximal, nvars - j), f"Fitt_{j}(m) != m^{nvars - j}", j,
                     fitt=fitt)
        checks.check((fitt == maximal) == (j == nvars - 1),
                     f"Fitt_{j}(m) = m does not match j = n - 1", j, fitt=fitt)
    return checks.report()


def verify_hilbert_burch(ideal: MonomialIdeal, budget: int | None = None) -> FittingReport:
    """Perfect ideals of grade 2 satisfy Fitt_1(I) = I."""
    _require_proper_nonzero(ideal)
    checks = _Checks("hilbert-burch", ideal)
    if is_perfect_grade2(ideal):
        fitt = fitting_ideal(ideal, 1, budget)
        checks.note("perfect of grade 2")
        checks.check(fitt == ideal, "perfect of grade 2 but Fitt_1(I) != I", 1, fitt=fitt)
    return checks.report()


def verify_hilbert_burch_converse(
    ideal: MonomialIdeal, budget: int | None = None
) -> FittingReport:
    """grade(I) >= 2 and Fitt_1(I) = I force height 2 and pd(S/I) = 2."""
    _require_proper_nonzero(ideal)
    checks = _Checks("hilbert-burch-converse", ideal)
    grade = height(ideal)
    if grade >= 2 and fitting_ideal(ideal, 1, budget) == ideal:
        pd = projective_dimension(ideal)
        checks.note("Fitt_1(I) = I with grade >= 2")
        checks.check(grade == 2 and pd == 2, "Fitt_1(I) = I but not perfect of grade 2", 1,
                     height=grade, pd=pd)
    return checks.report()


def verify_presentation_invariance(
    ideal: MonomialIdeal, extra: Monomial, budget: int | None = None
) -> FittingReport:
    """Adding a redundant generator u in I to the presentation changes no Fitt_j."""
    _require_proper_nonzero(ideal)
    if not membership(ideal, extra):
        raise PreconditionViolated(f"{extra} is not in {ideal}")
    checks = _Checks("presentation-invariance", ideal)
    enlarged = list(ideal.gens) + [extra]
    checks.note(f"extra generator {extra.format(ideal.ring.variable_names)}")
    for j in range(len(enlarged) + 1):
        expected = fitting_ideal(ideal, j, budget)
        for prune in (True, False):
            got = fitting_ideal_of_generators(ideal.ring, enlarged, j, budget, prune=prune)
            checks.check(got == expected, f"Fitt_{j} changes with a redundant generator", j,
                         enlarged=got, minimal=expected, prune=prune)
    return checks.report()


def verify_base_change(
    ideal: MonomialIdeal, keep: frozenset[int], budget: int | None = None
) -> FittingReport:
    """Fitting ideals commute with inverting the variables outside `keep`."""
    _require_proper_nonzero(ideal)
    checks = _Checks("base-change", ideal)
    local = monomial_localization(ideal, keep)
    names = ideal.ring.variable_names
    checks.note(f"kept variables {[names[i] for i in sorted(keep)]}")
    for j in range(ideal.num_gens + 1):
        expected = fitting_ideal(local, j, budget)
        got = monomial_localization(fitting_ideal(ideal, j, budget), keep)
        checks.check(got == expected, f"Fitt_{j} does not commute with localization", j,
                     localized_fitt=got, fitt_of_localized=expected)
    return checks.report()


def verify_worked_example(budget: int | None = None) -> FittingReport:
    """I = (x1*x2, x1*x3): Fitt_1(I) = (x2, x3), I is radical and has grade 1."""
    ring = PolynomialRing.standard(3)
    x1, x2, x3 = (ring.variable(i) for i in range(3))
    ideal = minimalize(ring, [x1 * x2, x1 * x3])
    checks = _Checks("worked-example", ideal)
    fitt = fitting_ideal(ideal, 1, budget)
    expected = minimalize(ring, [x2, x3])
    checks.check(fitt == expected, "Fitt_1(I) != (x2, x3)", 1, fitt=fitt)
    checks.check(radical(fitt) == expected, "sqrt(Fitt_1(I)) != (x2, x3)", 1, radical_only=True)
    checks.check(radical(ideal) == ideal, "I is not radical", 1)
    grade = height(ideal)
    checks.check(grade == 1, f"grade(I) = {grade}, expected 1", 1, grade=grade)
    return checks.report()
