"""Monomial ideals in a polynomial ring over the rationals."""

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import reduce

from ..algebra.monomial import Monomial, parse_monomial

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class PolynomialRing:
    """K[x_1..x_n] with K = Q; only the variable names matter."""

    variable_names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)
        if not names:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not _IDENTIFIER.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")

    @classmethod
    def standard(cls, nvars: int, prefix: str = "x") -> "PolynomialRing":
        """Ring on x1, ..., xn."""
        return cls(tuple(f"{prefix}{i}" for i in range(1, nvars + 1)))

    @property
    def nvars(self) -> int:
        return len(self.variable_names)

    def index(self, name: str) -> int:
        return self.variable_names.index(name)

    def variable(self, index: int) -> Monomial:
        if not 0 <= index < self.nvars:
            raise IndexError(f"variable {index} outside ring of {self.nvars} variables")
        return Monomial.variable(index)


@dataclass(frozen=True)
class MonomialIdeal:
    """An ideal given by its canonical minimal monomial generating set.

    The unit ideal has the single generator 1, the zero ideal none. Build instances with
    `minimalize` so the generating set stays canonical and equality is structural.
    """

    ring: PolynomialRing
    gens: tuple[Monomial, ...] = ()

    def __len__(self) -> int:
        return len(self.gens)

    @property
    def num_gens(self) -> int:
        """mu(I)."""
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one()

    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit()

    def __contains__(self, monomial: Monomial) -> bool:
        return membership(self, monomial)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    @property
    def support(self) -> frozenset[int]:
        return frozenset().union(*(g.support for g in self.gens))

    def format(self) -> str:
        return format_ideal(self)

    def __str__(self) -> str:
        return format_ideal(self)


def minimalize(ring: PolynomialRing, monomials: Iterable[Monomial]) -> MonomialIdeal:
    """Drop every monomial divisible by another one; sort the survivors canonically."""
    candidates = sorted(set(monomials), key=Monomial.sort_key)
    for m in candidates:
        for i, _ in m.exponents:
            if i >= ring.nvars:
                raise ValueError(f"monomial {m} uses a variable outside the ring")
    kept: list[Monomial] = []
    for m in candidates:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return MonomialIdeal(ring, tuple(kept))


def zero_ideal(ring: PolynomialRing) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def unit_ideal(ring: PolynomialRing) -> MonomialIdeal:
    return MonomialIdeal(ring, (Monomial.one(),))


def all_variables_ideal(ring: PolynomialRing) -> MonomialIdeal:
    """The graded maximal ideal (x_1, ..., x_n)."""
    return minimalize(ring, (Monomial.variable(i) for i in range(ring.nvars)))


def prime_of(ring: PolynomialRing, variables: Iterable[int]) -> MonomialIdeal:
    """The monomial prime P_T generated by the variables in T."""
    return minimalize(ring, (Monomial.variable(i) for i in variables))


def _same_ring(first: MonomialIdeal, second: MonomialIdeal) -> None:
    if first.ring != second.ring:
        raise ValueError("ideals live in different rings")


def membership(ideal: MonomialIdeal, monomial: Monomial) -> bool:
    return any(g.divides(monomial) for g in ideal.gens)


def contains(ideal: MonomialIdeal, other: MonomialIdeal) -> bool:
    """True when `other` is a subset of `ideal`."""
    _same_ring(ideal, other)
    return all(membership(ideal, g) for g in other.gens)


def ideal_sum(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _same_ring(first, second)
    return minimalize(first.ring, first.gens + second.gens)


def product(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _same_ring(first, second)
    return minimalize(first.ring, (u * v for u in first.gens for v in second.gens))


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k, with I^0 the unit ideal."""
    if k < 0:
        raise ValueError("negative ideal power")
    result = unit_ideal(ideal.ring)
    base = ideal
    # Square-and-multiply keeps intermediate generating sets minimal.
    while k:
        if k & 1:
            result = product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    return result


def intersection(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _same_ring(first, second)
    return minimalize(first.ring, (u.lcm(v) for u in first.gens for v in second.gens))


def intersect_all(ring: PolynomialRing, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Intersection of a family; the empty family gives the unit ideal."""
    return reduce(intersection, ideals, unit_ideal(ring))


def colon(ideal: MonomialIdeal, other: MonomialIdeal) -> MonomialIdeal:
    """(I : J) as the intersection over v in G(J) of (u / gcd(u, v) : u in G(I))."""
    _same_ring(ideal, other)
    parts = (
        minimalize(ideal.ring, (u.quotient(u.gcd(v)) for u in ideal.gens)) for v in other.gens
    )
    return intersect_all(ideal.ring, parts)


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return minimalize(ideal.ring, (g.squarefree_part() for g in ideal.gens))


def is_squarefree(ideal: MonomialIdeal) -> bool:
    return all(g.is_squarefree() for g in ideal.gens)


def monomial_localization(ideal: MonomialIdeal, keep: Iterable[int]) -> MonomialIdeal:
    """Set every variable outside `keep` to 1.

    mu of the result is mu(I R_P) for the monomial prime P on `keep`.
    """
    kept = frozenset(keep)
    return minimalize(ideal.ring, (g.restrict(kept) for g in ideal.gens))


def is_regular_sequence(ideal: MonomialIdeal) -> bool:
    """Minimal monomial generators form a regular sequence iff their supports are disjoint."""
    if ideal.is_unit():
        return False
    seen: set[int] = set()
    for g in ideal.gens:
        if seen & g.support:
            return False
        seen |= g.support
    return True


def format_ideal(ideal: MonomialIdeal) -> str:
    if ideal.is_zero():
        return "(0)"
    return "(" + ", ".join(g.format(ideal.ring.variable_names) for g in ideal.gens) + ")"


def generator_strings(ideal: MonomialIdeal) -> list[str]:
    """Generator texts in canonical order, as echoed in JSON reports."""
    return [g.format(ideal.ring.variable_names) for g in ideal.gens]


def ideal_text(ideal: MonomialIdeal) -> str:
    """One-line ideal text (`vars: x,y; gens: x*y`) accepted by the CLI parser."""
    names = ",".join(ideal.ring.variable_names)
    return f"vars: {names}; gens: {', '.join(generator_strings(ideal))}"


def ideal_from_strings(ring: PolynomialRing, monomials: Sequence[str]) -> MonomialIdeal:
    """Convenience constructor from monomial texts such as `x*y`."""
    return minimalize(ring, (parse_monomial(text, ring.variable_names) for text in monomials))
