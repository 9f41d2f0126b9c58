"""Finite simple graphs on [n] and their edge ideals."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import networkx as nx

from ..algebra.monomial import Monomial
from ..ideals.monomial_ideal import MonomialIdeal, PolynomialRing, minimalize
from ..ideals.primes import height

Edge = frozenset[int]


@dataclass(frozen=True)
class Graph:
    """Simple graph with vertex set {1, ..., n}."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = frozenset(frozenset(e) for e in self.edges)
        for e in normalized:
            if len(e) != 2:
                raise ValueError(f"loop or malformed edge {sorted(e)}")
            if not all(1 <= v <= self.n for v in e):
                raise ValueError(f"edge {sorted(e)} leaves the vertex set [1, {self.n}]")
        object.__setattr__(self, "edges", normalized)

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(frozenset(p) for p in pairs))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    @cached_property
    def _adjacency(self) -> dict[int, frozenset[int]]:
        adjacency: dict[int, set[int]] = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = sorted(e)
            adjacency[a].add(b)
            adjacency[b].add(a)
        return {v: frozenset(nbrs) for v, nbrs in adjacency.items()}

    def neighbours(self, vertex: int) -> frozenset[int]:
        """N(i)."""
        return self._adjacency[vertex]

    def closed_neighbourhood(self, vertex: int) -> frozenset[int]:
        """N[i] = N(i) together with i."""
        return self._adjacency[vertex] | {vertex}

    def degree(self, vertex: int) -> int:
        return len(self._adjacency[vertex])

    def regular_degree(self) -> int | None:
        """d when every vertex has degree d, else None."""
        degrees = {self.degree(v) for v in self.vertices}
        return degrees.pop() if len(degrees) == 1 else None

    def edges_avoiding(self, vertices: Iterable[int]) -> frozenset[Edge]:
        """Edges of G minus the given vertices."""
        removed = set(vertices)
        return frozenset(e for e in self.edges if not e & removed)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        chosen = set(vertices)
        return not any(e <= chosen for e in self.edges)

    def complement(self) -> "Graph":
        missing = (
            frozenset(p) for p in combinations(self.vertices, 2) if frozenset(p) not in self.edges
        )
        return Graph(self.n, frozenset(missing))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.sorted_edges())
        return graph

    def format(self) -> str:
        edges = ", ".join(f"{a}-{b}" for a, b in self.sorted_edges())
        return f"vertices: {self.n}; edges: {edges}"

    def __str__(self) -> str:
        return self.format()


def edge_neighbourhood(graph: Graph, vertex: int) -> frozenset[Edge]:
    """E(i): edges not containing i with an endpoint adjacent to i."""
    if vertex not in graph.vertices:
        raise ValueError(f"vertex {vertex} is not in the graph")
    nbrs = graph.neighbours(vertex)
    return frozenset(e for e in graph.edges if vertex not in e and e & nbrs)


def edge_ring(graph: Graph) -> PolynomialRing:
    return PolynomialRing.standard(graph.n)


def edge_ideal(graph: Graph) -> MonomialIdeal:
    """I(G) = (x_i x_j : {i, j} in E(G)) in K[x_1..x_n]."""
    if graph.m == 0:
        raise ValueError("edge ideal of a graph without edges")
    monomials = (Monomial.product_of(v - 1 for v in e) for e in graph.edges)
    return minimalize(edge_ring(graph), monomials)


def vertex_cover_number(graph: Graph) -> int:
    """c_G, the height of I(G)."""
    return height(edge_ideal(graph))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, i % n + 1) for i in range(1, n + 1)))


def path(n: int) -> Graph:
    """Path 1-2-...-n."""
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def star(leaves: int) -> Graph:
    """Star with center 1 and leaves 2, ..., leaves + 1."""
    return Graph.from_edges(leaves + 1, ((1, i) for i in range(2, leaves + 2)))


FAMILIES = {"K": complete, "C": cycle, "P": path, "S": star}


def from_family(name: str) -> Graph:
    """Graph from a family label such as K4, C5, P3 or S3."""
    prefix, size = name[:1].upper(), name[1:]
    if prefix not in FAMILIES or not size.isdigit():
        raise ValueError(f"unknown graph family {name!r}; use K<n>, C<n>, P<n> or S<n>")
    return FAMILIES[prefix](int(size))


def from_networkx(graph: nx.Graph) -> Graph:
    """Relabel nodes 1..n in sorted order."""
    label = {node: i for i, node in enumerate(sorted(graph.nodes), start=1)}
    return Graph.from_edges(len(label), ((label[a], label[b]) for a, b in graph.edges))


def all_graphs(max_vertices: int, min_vertices: int = 1) -> Iterator[Graph]:
    """One graph per isomorphism class with at least one edge, from the networkx atlas."""
    if max_vertices > 7:
        raise ValueError("the graph atlas only covers graphs with at most 7 vertices")
    for atlas_graph in nx.graph_atlas_g():
        nodes = atlas_graph.number_of_nodes()
        if min_vertices <= nodes <= max_vertices and atlas_graph.number_of_edges() > 0:
            yield from_networkx(atlas_graph)
