"""Exponent-vector monomials."""

import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from ..errors import ParseError

_FACTOR = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?\s*")


@dataclass(frozen=True)
class Monomial:
    """A monomial x^a stored as sorted (variable index, exponent) pairs.

    Absent variables have exponent 0 and zero exponents are never stored, so two
    monomials are equal exactly when their exponent maps are equal.
    """

    exponents: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for index, exponent in self.exponents:
            if exponent <= 0 or index < 0:
                raise ValueError(f"invalid exponent pair ({index}, {exponent})")

    @classmethod
    def from_dict(cls, exponents: Mapping[int, int]) -> "Monomial":
        return cls(tuple(sorted((i, e) for i, e in exponents.items() if e != 0)))

    @classmethod
    def from_vector(cls, vector: Sequence[int]) -> "Monomial":
        return cls(tuple((i, e) for i, e in enumerate(vector) if e != 0))

    @classmethod
    def one(cls) -> "Monomial":
        return cls()

    @classmethod
    def variable(cls, index: int, power: int = 1) -> "Monomial":
        return cls(((index, power),))

    @classmethod
    def product_of(cls, indices: Iterable[int]) -> "Monomial":
        """Squarefree monomial on a set of variable indices."""
        return cls(tuple((i, 1) for i in sorted(set(indices))))

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    def exponent(self, index: int) -> int:
        for i, e in self.exponents:
            if i == index:
                return e
        return 0

    def vector(self, nvars: int) -> tuple[int, ...]:
        dense = [0] * nvars
        for i, e in self.exponents:
            dense[i] = e
        return tuple(dense)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.exponents)

    def is_one(self) -> bool:
        return not self.exponents

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exponents)

    def squarefree_part(self) -> "Monomial":
        return Monomial(tuple((i, 1) for i, _ in self.exponents))

    def divides(self, other: "Monomial") -> bool:
        theirs = dict(other.exponents)
        return all(theirs.get(i, 0) >= e for i, e in self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self.exponents)
        for i, e in other.exponents:
            merged[i] = merged.get(i, 0) + e
        return Monomial.from_dict(merged)

    def __pow__(self, power: int) -> "Monomial":
        if power < 0:
            raise ValueError("negative power of a monomial")
        return Monomial(tuple((i, e * power) for i, e in self.exponents)) if power else Monomial()

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other; other must divide self."""
        if not other.divides(self):
            raise ValueError("divisor does not divide monomial")
        merged = dict(self.exponents)
        for i, e in other.exponents:
            merged[i] -= e
        return Monomial.from_dict(merged)

    def lcm(self, other: "Monomial") -> "Monomial":
        merged = dict(self.exponents)
        for i, e in other.exponents:
            merged[i] = max(merged.get(i, 0), e)
        return Monomial.from_dict(merged)

    def gcd(self, other: "Monomial") -> "Monomial":
        theirs = dict(other.exponents)
        return Monomial.from_dict({i: min(e, theirs.get(i, 0)) for i, e in self.exponents})

    def restrict(self, keep: Iterable[int]) -> "Monomial":
        """Set every variable outside `keep` to 1."""
        kept = set(keep)
        return Monomial(tuple((i, e) for i, e in self.exponents if i in kept))

    def sort_key(self) -> tuple:
        """Graded order: lower degree first, then lexicographically larger first."""
        return (self.degree, tuple((i, -e) for i, e in self.exponents))

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.exponents:
            return "1"
        factors = []
        for i, e in self.exponents:
            name = names[i] if names is not None else f"x{i + 1}"
            factors.append(name if e == 1 else f"{name}^{e}")
        return "*".join(factors)

    def __str__(self) -> str:
        return self.format()


def parse_monomial(
    text: str,
    names: Sequence[str],
    line: int = 1,
    column: int = 1,
) -> Monomial:
    """Parse `x^2*y*z` (or `1`) against declared variable names."""
    stripped = text.strip()
    if stripped == "1":
        return Monomial.one()
    if not stripped:
        raise ParseError("empty monomial", line, column)

    index_of = {name: i for i, name in enumerate(names)}
    exponents: dict[int, int] = {}
    offset = 0
    for part in text.split("*"):
        match = _FACTOR.fullmatch(part)
        if match is None:
            raise ParseError(f"malformed factor {part.strip()!r}", line, column + offset)
        name, power = match.group(1), match.group(2)
        if name not in index_of:
            raise ParseError(f"undeclared variable {name!r}", line, column + offset)
        idx = index_of[name]
        exponents[idx] = exponents.get(idx, 0) + (int(power) if power else 1)
        offset += len(part) + 1
    return Monomial.from_dict(exponents)
