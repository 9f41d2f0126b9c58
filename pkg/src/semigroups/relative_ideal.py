"""Relative ideals E of a numerical semigroup S: sets of integers with E + S inside E.

They model the monomial fractional ideals of K[[t^S]]: the generator g stands for t^g.
Every operation is exact because membership in g + S is decided by the semigroup table
and stabilizes past g + c(S).
"""

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from functools import reduce

from ..errors import PreconditionViolated
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class RelativeIdeal:
    """E = union of g + S over the minimal generators g, kept sorted."""

    semigroup: NumericalSemigroup
    gens: tuple[int, ...]

    def __contains__(self, z: int) -> bool:
        return any(z - g in self.semigroup for g in self.gens)

    @property
    def min(self) -> int:
        return self.gens[0]

    @property
    def num_gens(self) -> int:
        return len(self.gens)

    def is_ideal(self) -> bool:
        """An honest ideal of R: every generator lies in S."""
        return all(g in self.semigroup for g in self.gens)

    def is_proper(self) -> bool:
        return self.is_ideal() and 0 not in self

    def is_principal(self) -> bool:
        return len(self.gens) == 1

    def stable_from(self) -> int:
        """Every integer from here on belongs to E."""
        return self.min + self.semigroup.conductor

    def elements(self, lo: int, hi: int) -> list[int]:
        return [z for z in range(lo, hi) if z in self]

    def format(self) -> str:
        return "(" + ", ".join(map(str, self.gens)) + ")"

    def __str__(self) -> str:
        return self.format()


def _same_semigroup(first: RelativeIdeal, second: RelativeIdeal) -> None:
    if first.semigroup != second.semigroup:
        raise ValueError("relative ideals of different semigroups")


def relative_ideal(semigroup: NumericalSemigroup, elements: Iterable[int]) -> RelativeIdeal:
    """Relative ideal generated by the given integers, reduced to minimal generators."""
    kept: list[int] = []
    for z in sorted(set(elements)):
        if not any(z - g in semigroup for g in kept):
            kept.append(z)
    if not kept:
        raise ValueError("a relative ideal needs at least one generator")
    return RelativeIdeal(semigroup, tuple(kept))


def principal(semigroup: NumericalSemigroup, g: int = 0) -> RelativeIdeal:
    return RelativeIdeal(semigroup, (g,))


def maximal_ideal(semigroup: NumericalSemigroup) -> RelativeIdeal:
    """The maximal ideal of K[[t^S]], generated by the minimal generators of S."""
    return RelativeIdeal(semigroup, semigroup.minimal_generators)


def from_membership(
    semigroup: NumericalSemigroup,
    contains: Callable[[int], bool],
    lo: int,
    hi: int,
) -> RelativeIdeal:
    """Minimal generators of the relative ideal {z : contains(z)}.

    The window [lo, hi) must hold every minimal generator: z belongs to the ideal and
    z - g does not for any minimal generator g of S.
    """
    gens = [
        z
        for z in range(lo, hi)
        if contains(z) and not any(contains(z - g) for g in semigroup.minimal_generators)
    ]
    if not gens:
        raise ValueError(f"no generator found in the window [{lo}, {hi})")
    return RelativeIdeal(semigroup, tuple(gens))


def _generator_window(semigroup: NumericalSemigroup, lo: int) -> tuple[int, int]:
    """Minimal generators of a relative ideal whose minimum lies in [lo, lo + c] are below
    lo + 2c + e."""
    c, e = semigroup.conductor, semigroup.multiplicity
    return lo, lo + 2 * c + e + 1


def rel_sum(first: RelativeIdeal, second: RelativeIdeal) -> RelativeIdeal:
    _same_semigroup(first, second)
    return relative_ideal(first.semigroup, first.gens + second.gens)


def rel_product(first: RelativeIdeal, second: RelativeIdeal) -> RelativeIdeal:
    _same_semigroup(first, second)
    return relative_ideal(first.semigroup, (a + b for a in first.gens for b in second.gens))


def rel_power(ideal: RelativeIdeal, k: int) -> RelativeIdeal:
    """E^k; E^0 = S."""
    if k < 0:
        raise ValueError("negative power of a relative ideal")
    return reduce(rel_product, [ideal] * k, principal(ideal.semigroup))


def rel_shift(ideal: RelativeIdeal, a: int) -> RelativeIdeal:
    """a + E, the ideal t^a E."""
    return RelativeIdeal(ideal.semigroup, tuple(g + a for g in ideal.gens))


def rel_intersection(first: RelativeIdeal, second: RelativeIdeal) -> RelativeIdeal:
    _same_semigroup(first, second)
    lo, hi = _generator_window(first.semigroup, max(first.min, second.min))
    return from_membership(first.semigroup, lambda z: z in first and z in second, lo, hi)


def rel_contains(larger: RelativeIdeal, smaller: RelativeIdeal) -> bool:
    _same_semigroup(larger, smaller)
    return all(g in larger for g in smaller.gens)


def rel_colon(first: RelativeIdeal, second: RelativeIdeal) -> RelativeIdeal:
    """(E : F) = {z : z + F inside E}, the intersection of E - f over generators f of F."""
    _same_semigroup(first, second)
    shifted = [rel_shift(first, -f) for f in second.gens]
    return reduce(rel_intersection, shifted)


def rel_inverse(ideal: RelativeIdeal) -> RelativeIdeal:
    """E^-1 = (S : E)."""
    return rel_colon(principal(ideal.semigroup), ideal)


def rel_trace(ideal: RelativeIdeal) -> RelativeIdeal:
    """tr(E) = E^-1 E."""
    return rel_product(rel_inverse(ideal), ideal)


def is_trace_ideal(ideal: RelativeIdeal) -> bool:
    return rel_trace(ideal) == ideal


def canonical_ideal(semigroup: NumericalSemigroup) -> RelativeIdeal:
    """K = {z : F(S) - z not in S}, the standard canonical ideal with minimum 0."""
    frobenius = semigroup.frobenius
    lo, hi = _generator_window(semigroup, 0)
    return from_membership(semigroup, lambda z: frobenius - z not in semigroup, lo, hi)


def shift_into(semigroup: NumericalSemigroup, ideal: RelativeIdeal) -> int:
    """Smallest a with a + E inside S."""
    a = -ideal.min
    while not all(a + g in semigroup for g in ideal.gens):
        a += 1
    return a


def ideal_equal_up_to_shift(first: RelativeIdeal, second: RelativeIdeal) -> int | None:
    """Shift a with second = a + first, or None when the two are not translates.

    The shift is measured from `first` to `second`: a = min(second) - min(first), so
    (0, 1) and (4, 5) over <2, 5> give 4 and swapping the arguments gives -4.
    """
    _same_semigroup(first, second)
    if first.num_gens != second.num_gens:
        return None
    a = second.min - first.min
    return a if rel_shift(first, a).gens == second.gens else None


def as_ideal(ideal: RelativeIdeal) -> RelativeIdeal:
    """Translate E into S by its shift_into amount."""
    return rel_shift(ideal, shift_into(ideal.semigroup, ideal))


def require_ideal(ideal: RelativeIdeal) -> None:
    if not ideal.is_ideal():
        raise PreconditionViolated(f"{ideal} is not an ideal of {ideal.semigroup}")
