"""Chordality via maximum cardinality search."""

from ..errors import PreconditionViolated
from ..ideals.monomial_ideal import MonomialIdeal
from ..ideals.primes import minimal_primes
from .graph import Graph


def maximum_cardinality_order(graph: Graph) -> list[int]:
    """Visit order of maximum cardinality search; ties go to the smallest vertex."""
    weight = {v: 0 for v in graph.vertices}
    order: list[int] = []
    while weight:
        vertex = max(weight, key=lambda v: (weight[v], -v))
        order.append(vertex)
        del weight[vertex]
        for nbr in graph.neighbours(vertex):
            if nbr in weight:
                weight[nbr] += 1
    return order


def perfect_elimination_ordering(graph: Graph) -> list[int] | None:
    """A perfect elimination ordering of G, or None when G is not chordal.

    The reverse of a maximum cardinality search order is one exactly when G is chordal:
    for each vertex, its neighbours visited earlier must form a clique.
    """
    order = maximum_cardinality_order(graph)
    position = {v: p for p, v in enumerate(order)}
    for vertex in order:
        earlier = [u for u in graph.neighbours(vertex) if position[u] < position[vertex]]
        if not earlier:
            continue
        # It suffices to test the latest earlier neighbour against the others.
        parent = max(earlier, key=position.__getitem__)
        parent_nbrs = graph.neighbours(parent)
        if any(u != parent and u not in parent_nbrs for u in earlier):
            return None
    return list(reversed(order))


def is_chordal(graph: Graph) -> bool:
    return perfect_elimination_ordering(graph) is not None


def minimal_primes_graph(ideal: MonomialIdeal) -> Graph:
    """Graph on the ring variables whose edges are the minimal primes of a height-2
    unmixed squarefree ideal."""
    primes = minimal_primes(ideal)
    if any(len(p) != 2 for p in primes):
        raise PreconditionViolated(f"{ideal} has a minimal prime of size other than 2")
    return Graph.from_edges(ideal.ring.nvars, (tuple(v + 1 for v in sorted(p)) for p in primes))
