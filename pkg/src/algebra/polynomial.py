"""Integer-coefficient multivariate polynomials with exact arithmetic."""

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..errors import ParseError
from .monomial import Monomial, parse_monomial

_TERM = re.compile(r"\s*(\d+)\s*(?:\*\s*(.+))?$")


def _term_key(item: tuple[Monomial, int]) -> tuple:
    monomial = item[0]
    degree, lex = monomial.sort_key()
    return (-degree, lex)


@dataclass(frozen=True)
class Polynomial:
    """Finite sum of monomials with nonzero integer coefficients.

    Terms are kept in canonical order (highest degree first, ties lexicographic) and
    the zero polynomial is the empty tuple. Build instances through `normalize`.
    """

    terms: tuple[tuple[Monomial, int], ...] = ()

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return normalize([(value, Monomial.one())])

    @classmethod
    def from_monomial(cls, monomial: Monomial, coefficient: int = 1) -> "Polynomial":
        return normalize([(coefficient, monomial)])

    def is_zero(self) -> bool:
        return not self.terms

    def is_term(self) -> bool:
        """A single coefficient times a monomial."""
        return len(self.terms) == 1

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    def coefficient(self, monomial: Monomial) -> int:
        for m, c in self.terms:
            if m == monomial:
                return c
        return 0

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return normalize([(c, m) for m, c in self.terms] + [(c, m) for m, c in other.terms])

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return ZERO
        return normalize(
            (c1 * c2, m1 * m2) for m1, c1 in self.terms for m2, c2 in other.terms
        )

    def scale(self, factor: int) -> "Polynomial":
        return normalize((c * factor, m) for m, c in self.terms)

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for position, (monomial, coefficient) in enumerate(self.terms):
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            if monomial.is_one():
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial.format(names)
            else:
                body = f"{magnitude}*{monomial.format(names)}"
            if position == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.format()


ZERO = Polynomial()
ONE = Polynomial(((Monomial(), 1),))


def normalize(terms: Iterable[tuple[int, Monomial]]) -> Polynomial:
    """Collect like monomials, drop zero coefficients, order terms canonically."""
    collected: dict[Monomial, int] = {}
    for coefficient, monomial in terms:
        collected[monomial] = collected.get(monomial, 0) + coefficient
    kept = [(m, c) for m, c in collected.items() if c != 0]
    kept.sort(key=_term_key)
    return Polynomial(tuple(kept))


def parse_polynomial(text: str, names: Sequence[str], line: int = 1) -> Polynomial:
    """Parse `2*x^2*y - 3*z` against declared variable names."""
    source = text.strip()
    if not source:
        raise ParseError("empty polynomial", line, 1)

    # Split on top-level + and -, remembering each term's sign and column.
    chunks: list[tuple[int, str, int]] = []
    sign, start = 1, 0
    if source[0] in "+-":
        sign, start = (-1 if source[0] == "-" else 1), 1
    i = start
    for i in range(start, len(source)):
        if source[i] in "+-" and i > start:
            chunks.append((sign, source[start:i], start))
            sign, start = (-1 if source[i] == "-" else 1), i + 1
    chunks.append((sign, source[start:], start))

    terms: list[tuple[int, Monomial]] = []
    for sign, chunk, column in chunks:
        if not chunk.strip():
            raise ParseError("dangling sign", line, column + 1)
        match = _TERM.match(chunk)
        if match:
            coefficient = int(match.group(1))
            rest = match.group(2)
            monomial = (
                parse_monomial(rest, names, line, column + 1) if rest else Monomial.one()
            )
        else:
            coefficient = 1
            monomial = parse_monomial(chunk, names, line, column + 1)
        terms.append((sign * coefficient, monomial))
    return normalize(terms)
