"""Pydantic models for verification and search reports."""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Witness(BaseModel):
    """Data needed to reproduce a failing check."""

    detail: str
    command: str
    values: dict[str, Any] = Field(default_factory=dict)


class FittingReport(BaseModel):
    """Outcome of one checked statement on one instance."""

    model_config = ConfigDict(populate_by_name=True)

    statement: str
    instance: str
    passed: bool = Field(alias="pass")
    witness: Witness | None = None
    notes: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _failure_has_witness(self) -> "FittingReport":
        if not self.passed and self.witness is None:
            raise ValueError(f"failing report for {self.statement} carries no witness")
        return self


class SuiteSummary(BaseModel):
    """Counts for one verification suite run."""

    suite: str
    instances: int
    passed: int
    failed: int
    skipped: int = 0
    notes: list[str] = Field(default_factory=list)


class SuiteResult(BaseModel):
    summary: SuiteSummary
    failures: list[FittingReport] = Field(default_factory=list)
    reports: list[FittingReport] = Field(default_factory=list)


class SearchHit(BaseModel):
    """One semigroup visited by the canonical-ideal search."""

    semigroup: list[int]
    type: int
    hit: bool
    fitt1_gens: list[int] | None = None
    omega_gens: list[int]
    decided_by: str


class SearchReport(BaseModel):
    max_genus: int
    semigroups: int
    non_gorenstein: int
    hits: list[SearchHit] = Field(default_factory=list)
    skipped: list[SearchHit] = Field(default_factory=list)
    type2_checked: int = 0
    type2_failures: list[SearchHit] = Field(default_factory=list)
    radical_failures: list[SearchHit] = Field(default_factory=list)
    radical_checked: int = 0
    decided_by: dict[str, int] = Field(default_factory=dict)


class FixedIdealReport(BaseModel):
    """Monomial ideals I of a semigroup ring with Fitt_1(I) = I."""

    semigroup: list[int]
    max_generator: int
    ideals_scanned: int
    fixed: list[list[int]] = Field(default_factory=list)
    skipped: int = 0


class ComputeResult(BaseModel):
    """Fitt_j(I) (or its radical) for one ideal."""

    ideal: str
    j: int
    radical: bool = False
    gens: list[str]
    text: str


class EdgeRadicalResult(BaseModel):
    graph: str
    j: int
    gens: list[str]
    text: str
    locus_agrees: bool | None = None
    minors_agree: bool | None = None


class ClassifyResult(BaseModel):
    ideal: str
    j: int
    fitting_equals_ideal: bool
    fitting_squarefree: bool
    structured: bool
    chordal_complement: bool | None = None
    agree: bool


class InvariantsResult(BaseModel):
    semigroup: list[int]
    frobenius: int
    conductor: int
    gaps: list[int]
    genus: int
    multiplicity: int
    apery: list[int]
    pseudo_frobenius: list[int]
    type: int
    symmetric: bool
    canonical: list[int]


class SeriesReport(BaseModel):
    """Fitt_1 of a semigroup-ring ideal and the verdict against a target."""

    semigroup: list[int]
    ideal: list[int]
    fitt1_gens: list[int]
    trace_gens: list[int]
    bound: int
    equal: bool | None = None
