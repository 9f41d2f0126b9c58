"""Nonvanishing minors of relation matrices whose columns join two generators.

Each column of a Taylor-type presentation has two nonzero entries, a term at row a and
minus a term at row b, with entry(a, c) * u_a = entry(b, c) * u_b. Every permutation in a
square minor on rows R and columns C then carries the same term, so the minor is that term
times a minor of the signed incidence matrix of the graph whose vertices are the rows and
whose edges are the columns. Such a minor is +-1 exactly when C is a forest in which every
tree holds one vertex outside R, and 0 otherwise.

So the (m - j)-minors that do not vanish are the spanning forests of that graph with j
roots, and the value of each is the product, over the non-root vertices, of the entry
linking a vertex to its parent. The search below builds these forests by settling one
vertex at a time, either as a new root or below a vertex settled earlier, and keeps only
the minimal weights for each set of settled vertices.
"""

import logging
from collections.abc import Callable, Sequence
from typing import TypeVar

from ..errors import BudgetExceeded

logger = logging.getLogger(__name__)

W = TypeVar("W")

Assignment = tuple[tuple[int, int], ...]


def minimal_weights(
    weights: dict[W, Assignment],
    divides: Callable[[W, W], bool],
    grade: Callable[[W], int],
) -> dict[W, Assignment]:
    """Drop every weight divisible by another; a proper divisor always has smaller grade."""
    kept: dict[W, Assignment] = {}
    lower: list[W] = []
    current = None
    batch: list[W] = []
    for w in sorted(weights, key=grade):
        g = grade(w)
        if g != current:
            lower.extend(batch)
            batch = []
            current = g
        if not any(divides(v, w) for v in lower):
            kept[w] = weights[w]
            batch.append(w)
    return kept


def spanning_forests(
    nrows: int,
    edges: Sequence[tuple[int, int]],
    roots: int,
    weight: Callable[[int, int], W],
    one: W,
    multiply: Callable[[W, W], W],
    divides: Callable[[W, W], bool],
    grade: Callable[[W], int],
    limit: int,
) -> dict[W, Assignment]:
    """Minimal weights of the spanning forests with `roots` roots, each with a witness.

    A witness lists (row, column) pairs: the non-root rows and the columns joining them to
    their parents, i.e. the rows and columns of a nonvanishing minor of that weight.

    Raises:
        BudgetExceeded: If the stored partial forests exceed `limit`.
    """
    size = nrows - roots
    if size < 0 or roots < 0:
        return {}
    incident: list[list[tuple[int, int]]] = [[] for _ in range(nrows)]
    for c, (a, b) in enumerate(edges):
        incident[a].append((c, b))
        incident[b].append((c, a))

    # settled-vertex mask -> roots used -> minimal weights
    level: dict[int, dict[int, dict[W, Assignment]]] = {0: {0: {one: ()}}}
    stored = 1
    for settled in range(nrows):
        following: dict[int, dict[int, dict[W, Assignment]]] = {}
        for mask, by_roots in level.items():
            for vertex in range(nrows):
                if mask >> vertex & 1:
                    continue
                bit = mask | 1 << vertex
                parents = [(c, other) for c, other in incident[vertex] if mask >> other & 1]
                for used, chain in by_roots.items():
                    if used < roots:
                        target = following.setdefault(bit, {}).setdefault(used + 1, {})
                        for w, assignment in chain.items():
                            target.setdefault(w, assignment)
                    if settled - used < size and parents:
                        target = following.setdefault(bit, {}).setdefault(used, {})
                        for c, _ in parents:
                            factor = weight(vertex, c)
                            for w, assignment in chain.items():
                                product = multiply(w, factor)
                                if product not in target:
                                    target[product] = assignment + ((vertex, c),)
        for by_roots in following.values():
            for used, chain in by_roots.items():
                by_roots[used] = minimal_weights(chain, divides, grade)
                stored += len(by_roots[used])
        if stored > limit:
            raise BudgetExceeded(
                f"partial forests for {size}-minors of a {nrows}-row presentation", stored, limit
            )
        level = following

    full = (1 << nrows) - 1
    found = level.get(full, {}).get(roots, {})
    logger.debug(f"{roots}-root forests on {nrows} rows: {stored} states, {len(found)} weights")
    return found


def witness_rows_cols(assignment: Assignment) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sorted rows and columns of the minor a forest stands for."""
    return tuple(sorted(r for r, _ in assignment)), tuple(sorted(c for _, c in assignment))
