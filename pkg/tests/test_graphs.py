"""Tests for src/graphs/graph.py and src/graphs/chordal.py."""

import networkx as nx
import pytest

from src.errors import PreconditionViolated
from src.graphs.chordal import (
    is_chordal,
    maximum_cardinality_order,
    minimal_primes_graph,
    perfect_elimination_ordering,
)
from src.graphs.graph import (
    Graph,
    all_graphs,
    complete,
    cycle,
    edge_ideal,
    edge_neighbourhood,
    from_family,
    from_networkx,
    path,
    star,
    vertex_cover_number,
)
from tests.strategies import ideal_of

# ---------------------------------------------------------------------------
# Graphs and families
# ---------------------------------------------------------------------------


def test_family_sizes():
    assert complete(4).m == 6
    assert cycle(5).m == 5
    assert path(3).m == 2
    assert star(3).n == 4 and star(3).m == 3


def test_from_family():
    assert from_family("C5") == cycle(5)
    assert from_family("k4") == complete(4)
    with pytest.raises(ValueError):
        from_family("X3")
    with pytest.raises(ValueError):
        from_family("K")
    with pytest.raises(ValueError):
        cycle(2)


def test_invalid_edges_rejected():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 4)])


def test_neighbourhoods_on_a_path():
    p4 = path(4)
    assert p4.neighbours(2) == frozenset({1, 3})
    assert p4.closed_neighbourhood(1) == frozenset({1, 2})
    assert edge_neighbourhood(p4, 1) == frozenset({frozenset({2, 3})})
    assert edge_neighbourhood(p4, 2) == frozenset({frozenset({3, 4})})
    assert p4.edges_avoiding({2}) == frozenset({frozenset({3, 4})})


def test_regular_degree_and_complement():
    assert cycle(5).regular_degree() == 2
    assert path(3).regular_degree() is None
    assert path(3).complement().sorted_edges() == [(1, 3)]
    assert not path(3).is_independent({1, 2})
    assert path(3).is_independent({1, 3})


def test_edge_ideal_and_cover_number():
    assert edge_ideal(path(3)) == ideal_of(3, (1, 1, 0), (0, 1, 1))
    assert vertex_cover_number(cycle(5)) == 3
    assert vertex_cover_number(complete(4)) == 3
    assert vertex_cover_number(star(4)) == 1
    with pytest.raises(ValueError):
        edge_ideal(Graph.from_edges(2, []))


def test_format_matches_parser_syntax():
    assert path(3).format() == "vertices: 3; edges: 1-2, 2-3"


def test_networkx_round_trip():
    graph = cycle(5)
    assert from_networkx(graph.to_networkx()) == graph
    assert from_networkx(nx.path_graph(["a", "b", "c"])) == path(3)


def test_all_graphs_small_atlas():
    graphs = list(all_graphs(3))
    assert len(graphs) == 4
    assert all(g.m > 0 for g in graphs)
    with pytest.raises(ValueError):
        list(all_graphs(8))


# ---------------------------------------------------------------------------
# Chordality
# ---------------------------------------------------------------------------


def test_four_cycle_is_not_chordal():
    assert not is_chordal(cycle(4))
    assert perfect_elimination_ordering(cycle(4)) is None


def test_chordal_families():
    assert is_chordal(complete(5))
    assert is_chordal(path(5))
    assert is_chordal(star(4))


def test_mcs_visits_every_vertex():
    assert sorted(maximum_cardinality_order(cycle(6))) == list(range(1, 7))
    assert maximum_cardinality_order(path(3))[0] == 1


def test_perfect_elimination_ordering_is_valid():
    graph = from_family("K4")
    order = perfect_elimination_ordering(graph)
    assert sorted(order) == [1, 2, 3, 4]


def test_chordality_agrees_with_networkx():
    for graph in all_graphs(5):
        assert is_chordal(graph) == nx.is_chordal(graph.to_networkx()), graph


def test_minimal_primes_graph(triangle_ideal):
    assert minimal_primes_graph(triangle_ideal) == complete(3)
    with pytest.raises(PreconditionViolated):
        minimal_primes_graph(ideal_of(3, (1, 1, 0), (1, 0, 1)))
