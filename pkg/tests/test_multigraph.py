import pytest

from src.coset_graphs.multigraph import MultiGraph
from src.coset_graphs.utils import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    graph_to_dot,
    graph_to_export,
    hypercube_graph,
    kneser_graph,
)
from src.errors import BadParams, InvalidGraph


def test_extended_cycle():
    graph = cycle_graph(5, 2)
    assert len(graph.vertices) == 5
    assert len(graph.edges) == 10
    assert graph.edge_multiplicity() == 2
    assert graph.valency(0) == 2
    assert graph.degree(0) == 4
    assert graph.girth() == 2
    assert not graph.is_simple()


def test_base_collapses_parallel_classes():
    base = cycle_graph(5, 3).base()
    assert len(base.edges) == 5
    assert base.is_simple()
    assert base.girth() == 5


@pytest.mark.parametrize(
    "graph, vertices, edges, girth",
    [
        (kneser_graph(5, 2), 10, 15, 5),
        (hypercube_graph(3), 8, 12, 4),
        (complete_graph(4), 4, 6, 3),
        (complete_bipartite_graph(3), 6, 9, 4),
    ],
)
def test_standard_families(graph, vertices, edges, girth):
    assert len(graph.vertices) == vertices
    assert len(graph.edges) == edges
    assert graph.girth() == girth
    assert graph.is_regular()
    assert graph.is_connected()


def test_extender_and_multiplicity():
    graph = complete_bipartite_graph(3, 4)
    assert len(graph.edges) == 36
    assert graph.multiplicity((0, 0), (1, 2)) == 4
    assert graph.multiplicity((0, 0), (0, 1)) == 0
    assert graph.degree_signature((0, 0)) == (12, (4, 4, 4))


def test_components():
    triangles = MultiGraph(range(6), [(i, (i, (i + 1) % 3)) for i in range(3)] + [(3 + i, (3 + i, 3 + (i + 1) % 3)) for i in range(3)])
    assert len(triangles.components()) == 2
    assert not triangles.is_connected()


def test_invalid_graphs():
    with pytest.raises(InvalidGraph):
        MultiGraph([0, 1], [("e", (0, 0))])
    with pytest.raises(InvalidGraph):
        MultiGraph([0, 1], [("e", (0, 2))])
    with pytest.raises(InvalidGraph):
        MultiGraph([0, 1], [("e", (0, 1)), ("e", (1, 0))])
    with pytest.raises(BadParams):
        cycle_graph(2)


def test_subgraph_on_edges():
    graph = cycle_graph(4, 2)
    induced = graph.subgraph_on_edges([(0, 0), (0, 1), (1, 0)])
    assert len(induced.vertices) == 3
    assert induced.multiplicity(0, 1) == 2


def test_exports():
    graph = cycle_graph(3, 2)
    export = graph_to_export(graph)
    assert export.vertices == ["v0", "v1", "v2"]
    assert len(export.edges) == 6
    assert export.edges[0].ends == ["v0", "v1"]

    source = graph_to_dot(graph).source
    assert source.startswith("graph")
    assert "multiplicity=2" in source
    assert source.count("--") == 3


def test_acyclic_girth_and_incidence():
    path = MultiGraph(range(3), [("a", (0, 1)), ("b", (1, 2))])
    assert path.girth() is None
    assert sorted(path.incident_edges(1)) == ["a", "b"]
    assert path.neighbours(1) == [0, 2]
    assert path.components() == [[0, 1, 2]]
