"""Numerical semigroups, their invariants and the genus tree."""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from math import gcd

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SemigroupInvariants:
    frobenius: int
    conductor: int
    gaps: tuple[int, ...]
    genus: int
    multiplicity: int
    minimal_generators: tuple[int, ...]
    apery: tuple[int, ...]
    pseudo_frobenius: tuple[int, ...]
    type: int

    @property
    def is_symmetric(self) -> bool:
        return 2 * self.genus == self.conductor


@dataclass(frozen=True)
class NumericalSemigroup:
    """Cofinite submonoid of the non-negative integers generated by coprime integers.

    The generators are normalized to the minimal generating set, so equal semigroups
    compare equal. Membership is decided from a table built once up to the conductor.
    """

    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(sorted(set(self.generators)))
        if not gens or gens[0] <= 0:
            raise ValueError(f"semigroup generators must be positive, got {self.generators}")
        if gcd(*gens) != 1:
            raise ValueError(f"semigroup generators {gens} are not coprime")
        flags = _membership_table(gens)
        object.__setattr__(self, "_flags", flags)
        candidates = range(1, len(flags) + gens[0] + 1)
        members = [x for x in candidates if x >= len(flags) or flags[x]]
        minimal = _minimal_generators(members, self.__contains__)
        object.__setattr__(self, "generators", minimal)

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "NumericalSemigroup":
        """Semigroup with the given gap set (which must be closed under the semigroup)."""
        holes = frozenset(gaps)
        conductor = max(holes) + 1 if holes else 0
        members = [x for x in range(1, 2 * conductor + 2) if x not in holes]
        return cls(_minimal_generators(members, lambda x: x >= 0 and x not in holes))

    @property
    def conductor(self) -> int:
        return len(self._flags)

    @property
    def frobenius(self) -> int:
        """Largest gap; -1 for the semigroup of all non-negative integers."""
        return self.conductor - 1

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        return x >= self.conductor or self._flags[x]

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.conductor) if not self._flags[x])

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        return self.generators

    def elements_below(self, bound: int) -> list[int]:
        return [x for x in range(max(bound, 0)) if x in self]

    def apery_set(self, n: int | None = None) -> tuple[int, ...]:
        """Smallest element in each residue class mod n (default: the multiplicity)."""
        modulus = self.multiplicity if n is None else n
        if modulus not in self:
            raise ValueError(f"{modulus} is not in the semigroup")
        found: dict[int, int] = {}
        x = 0
        while len(found) < modulus:
            if x in self and x % modulus not in found:
                found[x % modulus] = x
            x += 1
        return tuple(found[r] for r in range(modulus))

    @cached_property
    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Gaps f with f + s in S for every nonzero s in S."""
        if not self.gaps:
            return (-1,)
        return tuple(
            f for f in self.gaps if all(f + g in self for g in self.minimal_generators)
        )

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius)

    def is_gorenstein(self) -> bool:
        return self.type == 1

    def invariants(self) -> SemigroupInvariants:
        return semigroup_invariants(self)

    def format(self) -> str:
        return "<" + ", ".join(map(str, self.minimal_generators)) + ">"

    def __str__(self) -> str:
        return self.format()


def _membership_table(generators: tuple[int, ...]) -> tuple[bool, ...]:
    """Membership flags for 0..conductor - 1: stop at the first run of e members."""
    e = generators[0]
    flags: list[bool] = []
    run = 0
    while run < e:
        n = len(flags)
        member = n == 0 or any(n >= g and flags[n - g] for g in generators)
        flags.append(member)
        run = run + 1 if member else 0
    return tuple(flags[: len(flags) - e])


def _minimal_generators(members: list[int], contains) -> tuple[int, ...]:
    """Nonzero members that are not a sum of two nonzero members."""
    result = []
    for x in sorted(members):
        if x <= 0:
            continue
        if not any(contains(a) and contains(x - a) for a in range(1, x // 2 + 1)):
            result.append(x)
    return tuple(result)


def semigroup_invariants(semigroup: NumericalSemigroup) -> SemigroupInvariants:
    return SemigroupInvariants(
        frobenius=semigroup.frobenius,
        conductor=semigroup.conductor,
        gaps=semigroup.gaps,
        genus=semigroup.genus,
        multiplicity=semigroup.multiplicity,
        minimal_generators=semigroup.minimal_generators,
        apery=semigroup.apery_set(),
        pseudo_frobenius=semigroup.pseudo_frobenius,
        type=semigroup.type,
    )


def enumerate_semigroups(
    max_genus: int,
    max_multiplicity: int | None = None,
    max_conductor: int | None = None,
) -> Iterator[NumericalSemigroup]:
    """All numerical semigroups of genus <= max_genus, by genus then generators.

    Children of S in the genus tree are S minus one minimal generator larger than F(S).
    Multiplicity and conductor never decrease down the tree, so both bounds prune
    whole subtrees.
    """
    level = [NumericalSemigroup((1,))]
    for genus in range(max_genus + 1):
        level.sort(key=lambda s: s.minimal_generators)
        logger.debug(f"Genus {genus}: {len(level)} semigroups")
        yield from level
        if genus == max_genus:
            break
        children = []
        for parent in level:
            for x in parent.minimal_generators:
                if x <= parent.frobenius:
                    continue
                child = NumericalSemigroup.from_gaps(parent.gaps + (x,))
                if max_multiplicity is not None and child.multiplicity > max_multiplicity:
                    continue
                if max_conductor is not None and child.conductor > max_conductor:
                    continue
                children.append(child)
        level = children
