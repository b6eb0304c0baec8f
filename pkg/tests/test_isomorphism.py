import pytest

from src.catalog.families import knn
from src.coset_graphs.construction import build_coset_graph
from src.coset_graphs.isomorphism import graph_isomorphic
from src.coset_graphs.multigraph import MultiGraph
from src.coset_graphs.utils import complete_bipartite_graph, cycle_graph, hypercube_graph, kneser_graph, petersen_graph
from src.errors import SearchCapExceeded
from src.permutation_groups.group import cyclic


def test_witness_preserves_incidence():
    first = cycle_graph(6, 2)
    second = first.relabel({v: (v * 5) % 6 for v in first.vertices}, {e: ("x", e) for e in first.edges})
    isomorphic, witness = graph_isomorphic(first, second)
    assert isomorphic
    for edge in first.edges:
        image = witness.edge_map[edge]
        assert set(second.ends(image)) == {witness.vertex_map[end] for end in first.ends(edge)}


def test_same_degrees_different_graphs():
    two_triangles = MultiGraph(
        range(6),
        [(i, (i, (i + 1) % 3)) for i in range(3)] + [(3 + i, (3 + i, 3 + (i + 1) % 3)) for i in range(3)],
    )
    assert graph_isomorphic(cycle_graph(6), two_triangles) == (False, None)


def test_multiplicity_matters():
    assert graph_isomorphic(cycle_graph(4, 2), hypercube_graph(2).extender(2))[0]
    assert not graph_isomorphic(cycle_graph(4, 2), cycle_graph(8))[0]


def test_knn_coset_graph_is_extended_complete_bipartite():
    entry = knn(3, 4)
    graph, params = build_coset_graph(entry.group, cyclic(entry.elements["a"]), cyclic(entry.elements["z"]))
    assert (params.k, params.lam) == (3, 4)
    assert graph_isomorphic(graph, complete_bipartite_graph(3, 4))[0]


def test_budget():
    with pytest.raises(SearchCapExceeded):
        graph_isomorphic(kneser_graph(5, 2), kneser_graph(5, 2), budget=1)


def test_kneser_five_two_is_petersen():
    isomorphic, witness = graph_isomorphic(kneser_graph(5, 2), petersen_graph())
    assert isomorphic
    assert sorted(witness.vertex_map.values()) == list(range(10))


def _alternating_cycle(vertices: list) -> list:
    n = len(vertices)
    edges = []
    for i in range(n):
        ends = (vertices[i], vertices[(i + 1) % n])
        edges += [((ends, copy), ends) for copy in range(2 if i % 2 == 0 else 1)]
    return edges


def test_equal_signatures_are_not_enough():
    two_squares = MultiGraph(range(8), _alternating_cycle([0, 1, 2, 3]) + _alternating_cycle([4, 5, 6, 7]))
    octagon = MultiGraph(range(8), _alternating_cycle(list(range(8))))
    assert len(two_squares.edges) == len(octagon.edges) == 12
    assert graph_isomorphic(two_squares, octagon) == (False, None)
    assert graph_isomorphic(octagon, octagon.relabel({v: (v + 2) % 8 for v in range(8)}, {e: e for e in octagon.edges}))[0]
