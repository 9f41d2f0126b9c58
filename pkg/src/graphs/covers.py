"""Admissible covers and the combinatorial radical of Fitting ideals of edge ideals."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from ..algebra.monomial import Monomial
from ..config import resolve_budget
from ..errors import BudgetExceeded, PreconditionViolated
from ..ideals.monomial_ideal import (
    MonomialIdeal,
    all_variables_ideal,
    ideal_sum,
    minimalize,
    unit_ideal,
    zero_ideal,
)
from .graph import (
    Edge,
    Graph,
    complete,
    edge_ideal,
    edge_neighbourhood,
    edge_ring,
    vertex_cover_number,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdmissibleCover:
    """Blocks A_s of edges assigned to the vertices i_s of F."""

    blocks: tuple[tuple[int, tuple[Edge, ...]], ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.blocks)

    @property
    def size(self) -> int:
        return sum(len(block) for _, block in self.blocks)

    def is_valid(self, graph: Graph) -> bool:
        """Re-check the block, disjointness and distinct-triple conditions."""
        seen_edges: set[Edge] = set()
        owner: dict[frozenset[int], int] = {}
        for vertex, block in self.blocks:
            if not block or not set(block) <= edge_neighbourhood(graph, vertex):
                return False
            for e in block:
                if e in seen_edges:
                    return False
                seen_edges.add(e)
                triple = e | {vertex}
                if owner.setdefault(triple, vertex) != vertex:
                    return False
        return True

    def format(self) -> str:
        parts = []
        for vertex, block in self.blocks:
            edges = ", ".join("{" + ",".join(map(str, sorted(e))) + "}" for e in block)
            parts.append(f"A_{vertex} = {{{edges}}}")
        return "; ".join(parts)


class _CoverSearch:
    """Depth-first search over per-vertex blocks with a shared node budget."""

    def __init__(self, graph: Graph, budget: int | None = None):
        self.graph = graph
        self.limit = resolve_budget(budget)
        self.nodes = 0
        self._neighbourhoods = {
            v: sorted(edge_neighbourhood(graph, v), key=sorted) for v in graph.vertices
        }

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceeded("admissible-cover search nodes", self.nodes, self.limit)

    def _options(self, vertex: int, used: set[Edge], triples: set[frozenset[int]]) -> list[Edge]:
        return [
            e
            for e in self._neighbourhoods[vertex]
            if e not in used and (e | {vertex}) not in triples
        ]

    def enumerate(self, vertices: list[int], size: int) -> list[AdmissibleCover]:
        found: list[AdmissibleCover] = []

        def visit(pos, used, triples, blocks, total):
            self._tick()
            if pos == len(vertices):
                if total == size:
                    found.append(AdmissibleCover(tuple(blocks)))
                return
            vertex = vertices[pos]
            options = self._options(vertex, used, triples)
            room = size - total - (len(vertices) - pos - 1)
            for k in range(1, min(len(options), room) + 1):
                for block in combinations(options, k):
                    visit(
                        pos + 1,
                        used | set(block),
                        triples | {e | {vertex} for e in block},
                        blocks + [(vertex, block)],
                        total + k,
                    )

        visit(0, frozenset(), frozenset(), [], 0)
        return found

    def max_size(self, vertices: list[int]) -> int:
        """Largest total size of an admissible cover of the vertex set, 0 if none."""
        best = 0

        def visit(pos, used, triples, total):
            nonlocal best
            self._tick()
            if pos == len(vertices):
                best = max(best, total)
                return
            room = [len(self._options(v, used, triples)) for v in vertices[pos:]]
            if min(room) == 0 or total + sum(room) <= best:
                return
            vertex = vertices[pos]
            options = self._options(vertex, used, triples)
            for k in range(len(options), 0, -1):
                for block in combinations(options, k):
                    visit(
                        pos + 1,
                        used | set(block),
                        triples | {e | {vertex} for e in block},
                        total + k,
                    )

        visit(0, frozenset(), frozenset(), 0)
        return best


def _vertex_list(graph: Graph, vertices: Iterable[int]) -> list[int]:
    chosen = sorted(set(vertices))
    if not chosen:
        raise PreconditionViolated("an admissible cover needs a nonempty vertex set")
    for v in chosen:
        if v not in graph.vertices:
            raise PreconditionViolated(f"vertex {v} is not in the graph")
    return chosen


def admissible_covers(
    graph: Graph,
    vertices: Iterable[int],
    size: int,
    budget: int | None = None,
) -> list[AdmissibleCover]:
    """Every admissible cover of F of the given total size.

    Raises:
        BudgetExceeded: If the search visits more nodes than the budget allows.
    """
    chosen = _vertex_list(graph, vertices)
    if size < len(chosen):
        return []
    return _CoverSearch(graph, budget).enumerate(chosen, size)


def max_cover_size(graph: Graph, vertices: Iterable[int], budget: int | None = None) -> int:
    return _CoverSearch(graph, budget).max_size(_vertex_list(graph, vertices))


def has_admissible_cover(
    graph: Graph,
    vertices: Iterable[int],
    size: int,
    budget: int | None = None,
) -> bool:
    """Dropping an edge from a block of two or more keeps a cover admissible, so the
    achievable sizes are exactly |F|, ..., max_cover_size(F)."""
    chosen = _vertex_list(graph, vertices)
    if size < len(chosen):
        return False
    return size <= _CoverSearch(graph, budget).max_size(chosen)


def minimal_covered_sets(
    graph: Graph, size: int, budget: int | None = None
) -> list[frozenset[int]]:
    """Independent sets F with an admissible cover of the given size, minimal by inclusion.

    Sets are examined by increasing cardinality; a set is skipped once it contains a set
    already found.
    """
    search = _CoverSearch(graph, budget)
    found: list[frozenset[int]] = []
    for k in range(1, min(size, graph.n) + 1):
        for candidate in combinations(graph.vertices, k):
            chosen = frozenset(candidate)
            if not graph.is_independent(chosen) or any(f <= chosen for f in found):
                continue
            if size <= search.max_size(list(candidate)):
                found.append(chosen)
    logger.debug(f"Admissible-cover search for size {size}: {search.nodes} nodes")
    return found


def radical_fitting_formula(graph: Graph, j: int, budget: int | None = None) -> MonomialIdeal:
    """sqrt(Fitt_j(I(G))) from admissible covers.

    j >= m gives the unit ideal and j = 0 the zero ideal (Fitt_0 of a nonzero ideal is
    zero). For 1 <= j < c_G the result is I(G); otherwise I(G) + J with J generated by
    x_F over the minimal independent sets F having an admissible cover of size m - j.
    """
    ring = edge_ring(graph)
    ideal = edge_ideal(graph)
    m = graph.m
    if j < 0:
        raise PreconditionViolated(f"Fitting index must be non-negative, got {j}")
    if j >= m:
        return unit_ideal(ring)
    if j == 0:
        return zero_ideal(ring)
    if j < vertex_cover_number(graph):
        return ideal
    extra = [
        Monomial.product_of(v - 1 for v in f) for f in minimal_covered_sets(graph, m - j, budget)
    ]
    return ideal_sum(ideal, minimalize(ring, extra))


def radical_variables(graph: Graph, j: int) -> frozenset[int]:
    """Vertices i with x_i in sqrt(Fitt_j(I(G))): those with |E(i)| >= m - j."""
    m = graph.m
    return frozenset(v for v in graph.vertices if len(edge_neighbourhood(graph, v)) >= m - j)


def maximal_ideal_criterion(graph: Graph, j: int) -> bool:
    """sqrt(Fitt_j(I(G))) is the graded maximal ideal iff m - min|E(i)| <= j < m."""
    smallest = min(len(edge_neighbourhood(graph, v)) for v in graph.vertices)
    return graph.m - smallest <= j < graph.m


def neighbourhood_criterion(graph: Graph, j: int) -> bool:
    """The same condition phrased as max(|N(i)| + |E(G_i)|) <= j < m, G_i = G - N[i]."""
    worst = max(
        graph.degree(v) + len(graph.edges_avoiding(graph.closed_neighbourhood(v)))
        for v in graph.vertices
    )
    return worst <= j < graph.m


def regular_graph_criterion(graph: Graph, j: int) -> bool:
    """For a d-regular graph: j >= d + |E(G_i)| for every i (and j < m)."""
    d = graph.regular_degree()
    if d is None:
        raise PreconditionViolated("graph is not regular")
    return j < graph.m and all(
        j >= d + len(graph.edges_avoiding(graph.closed_neighbourhood(v))) for v in graph.vertices
    )


def complete_graph_radical(n: int, j: int) -> MonomialIdeal:
    """Closed form of sqrt(Fitt_j(I(K_n))): zero at j = 0, I(K_n) for 1 <= j <= n - 2,
    the maximal ideal for n - 1 <= j < C(n, 2), the unit ideal beyond."""
    graph = complete(n)
    ring = edge_ring(graph)
    if j >= graph.m:
        return unit_ideal(ring)
    if j == 0:
        return zero_ideal(ring)
    if j <= n - 2:
        return edge_ideal(graph)
    return all_variables_ideal(ring)
