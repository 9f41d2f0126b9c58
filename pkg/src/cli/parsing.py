"""Text formats for ideals, graphs and semigroups.

Each format is a list of `key: value` lines; on the command line `;` may stand in for a
newline, so `vars: x,y; gens: x*y` is a complete ideal. Line and column numbers in
ParseError are 1-based and refer to the logical lines.
"""

import re
from dataclasses import dataclass
from pathlib import Path

from ..algebra.monomial import parse_monomial
from ..errors import ParseError
from ..graphs.graph import Graph
from ..ideals.monomial_ideal import MonomialIdeal, PolynomialRing, minimalize
from ..semigroups.relative_ideal import RelativeIdeal, relative_ideal
from ..semigroups.semigroup import NumericalSemigroup

_KEY = re.compile(r"\s*([A-Za-z_]+)\s*:")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_EDGE = re.compile(r"\s*(\d+)\s*-\s*(\d+)\s*")


@dataclass(frozen=True)
class Field:
    value: str
    line: int
    column: int


def read_source(text_or_path: str) -> str:
    """File contents when the argument names an existing file, else the text itself."""
    try:
        path = Path(text_or_path)
        if path.is_file():
            return path.read_text()
    except OSError:
        pass
    return text_or_path


def _logical_lines(text: str) -> list[str]:
    return [part for raw in text.splitlines() for part in raw.split(";")]


def parse_fields(text: str, required: tuple[str, ...]) -> dict[str, Field]:
    """Split `key: value` lines and check that exactly the required keys appear."""
    fields: dict[str, Field] = {}
    lines = _logical_lines(text)
    for number, line in enumerate(lines, start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        match = _KEY.match(line)
        if match is None:
            column = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected `key: value`", number, column)
        key = match.group(1)
        if key not in required:
            raise ParseError(f"unknown key {key!r}", number, match.start(1) + 1)
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", number, match.start(1) + 1)
        value = line[match.end():]
        fields[key] = Field(value, number, match.end() + 1)
    for key in required:
        if key not in fields:
            raise ParseError(f"missing `{key}:` line", len(lines) or 1, 1)
    return fields


def _split_items(item: Field) -> list[tuple[str, int]]:
    """Comma-separated items with the column where each starts."""
    pieces = []
    column = item.column
    for piece in item.value.split(","):
        pieces.append((piece, column))
        column += len(piece) + 1
    return pieces


def _integers(item: Field, what: str) -> list[int]:
    values = []
    for piece, column in _split_items(item):
        text = piece.strip()
        if not re.fullmatch(r"-?\d+", text):
            raise ParseError(f"{what} must be integers, got {text!r}", item.line, column)
        values.append(int(text))
    return values


def parse_ideal(text: str) -> MonomialIdeal:
    """`vars: x,y,z` and `gens: x*y, x*z`, minimalized."""
    fields = parse_fields(text, ("vars", "gens"))
    names = []
    for piece, column in _split_items(fields["vars"]):
        name = piece.strip()
        if not _NAME.fullmatch(name):
            raise ParseError(f"bad variable name {name!r}", fields["vars"].line, column)
        if name in names:
            raise ParseError(f"variable {name!r} declared twice", fields["vars"].line, column)
        names.append(name)
    ring = PolynomialRing(tuple(names))

    gens = fields["gens"]
    if not gens.value.strip():
        return minimalize(ring, [])
    monomials = [
        parse_monomial(piece, names, gens.line, column) for piece, column in _split_items(gens)
    ]
    return minimalize(ring, monomials)


def parse_graph(text: str) -> Graph:
    """`vertices: 4` and `edges: 1-2, 2-3`."""
    fields = parse_fields(text, ("vertices", "edges"))
    count = _integers(fields["vertices"], "vertex count")
    if len(count) != 1 or count[0] < 1:
        raise ParseError("vertex count must be one positive integer",
                         fields["vertices"].line, fields["vertices"].column)
    n = count[0]
    edges = fields["edges"]
    pairs = []
    if edges.value.strip():
        for piece, column in _split_items(edges):
            match = _EDGE.fullmatch(piece)
            if match is None:
                raise ParseError(f"malformed edge {piece.strip()!r}", edges.line, column)
            a, b = int(match.group(1)), int(match.group(2))
            if a == b or not (1 <= a <= n and 1 <= b <= n):
                raise ParseError(f"edge {a}-{b} is a loop or leaves [1, {n}]", edges.line, column)
            pairs.append((a, b))
    return Graph.from_edges(n, pairs)


def parse_semigroup(text: str) -> NumericalSemigroup:
    """`gens: 4,5`, or just `4,5`."""
    if ":" not in text:
        text = f"gens: {text}"
    field = parse_fields(text, ("gens",))["gens"]
    values = _integers(field, "semigroup generators")
    try:
        return NumericalSemigroup(tuple(values))
    except ValueError as e:
        raise ParseError(str(e), field.line, field.column) from e


def parse_rel_ideal(semigroup: NumericalSemigroup, text: str) -> RelativeIdeal:
    """`ideal: 12,13,14,15`, or just the list."""
    if ":" not in text:
        text = f"ideal: {text}"
    field = parse_fields(text, ("ideal",))["ideal"]
    return relative_ideal(semigroup, _integers(field, "ideal generators"))
