from itertools import combinations
from typing import Optional

import networkx as nx
from graphviz import Graph
from pydantic import BaseModel, Field

from src.coset_graphs.multigraph import MultiGraph
from src.errors import BadParams


class EdgeExport(BaseModel):
    id: str = Field(description="Edge identifier")
    ends: list[str] = Field(description="The two incident vertex identifiers")


class GraphExport(BaseModel):
    vertices: list[str] = Field(description="Vertex identifiers in canonical order")
    edges: list[EdgeExport] = Field(description="Edges in canonical order")


def vertex_names(graph: MultiGraph) -> dict:
    return {vertex: f"v{position}" for position, vertex in enumerate(graph.vertices)}


def edge_names(graph: MultiGraph) -> dict:
    return {edge: f"e{position}" for position, edge in enumerate(graph.edges)}


def graph_to_export(graph: MultiGraph) -> GraphExport:
    vertex_ids = vertex_names(graph)
    return GraphExport(
        vertices=list(vertex_ids.values()),
        edges=[
            EdgeExport(id=edge_id, ends=[vertex_ids[end] for end in graph.ends(edge)])
            for edge, edge_id in edge_names(graph).items()
        ],
    )


def graph_to_dot(graph: MultiGraph, name: str = "coset_graph", comment: Optional[str] = None) -> Graph:
    """
    Undirected DOT rendering; each parallel class becomes a single edge
    carrying a `multiplicity` attribute.
    """
    vertex_ids = vertex_names(graph)
    dot = Graph(name=name, comment=comment)
    dot.attr(layout="neato", overlap="false")

    for vertex_id in vertex_ids.values():
        dot.node(vertex_id, label=vertex_id, shape="circle")

    drawn = set()
    for edge in graph.edges:
        u, v = graph.ends(edge)
        pair = frozenset((u, v))
        if pair in drawn:
            continue
        drawn.add(pair)
        multiplicity = graph.multiplicity(u, v)
        dot.edge(
            vertex_ids[u],
            vertex_ids[v],
            label=str(multiplicity) if multiplicity > 1 else "",
            multiplicity=str(multiplicity),
        )
    return dot


def _sorted_pair(u, v) -> tuple:
    return (u, v) if u <= v else (v, u)


def cycle_graph(n: int, multiplicity: int = 1) -> MultiGraph:
    """C_n with edge i joining i and i + 1."""
    if n < 3:
        raise BadParams(f"A cycle needs at least 3 vertices, got {n}")
    graph = MultiGraph.from_networkx(nx.cycle_graph(n), lambda u, v: u if (u + 1) % n == v else v)
    return graph.extender(multiplicity) if multiplicity > 1 else graph


def complete_graph(n: int, multiplicity: int = 1) -> MultiGraph:
    graph = MultiGraph.from_networkx(nx.complete_graph(n), _sorted_pair)
    return graph.extender(multiplicity) if multiplicity > 1 else graph


def complete_bipartite_graph(n: int, multiplicity: int = 1) -> MultiGraph:
    """K_{n,n} on the vertices (side, i); edge (i, j) joins (0, i) and (1, j)."""
    source = nx.relabel_nodes(nx.complete_bipartite_graph(n, n), lambda k: divmod(k, n))
    graph = MultiGraph.from_networkx(source, lambda u, v: (min(u, v)[1], max(u, v)[1]))
    return graph.extender(multiplicity) if multiplicity > 1 else graph


def kneser_graph(n: int, r: int) -> MultiGraph:
    """Vertices are the r-subsets of {0..n-1}; disjoint subsets are adjacent."""
    subsets = list(combinations(range(n), r))
    source = nx.Graph()
    source.add_nodes_from(subsets)
    source.add_edges_from((u, v) for u, v in combinations(subsets, 2) if not set(u) & set(v))
    return MultiGraph.from_networkx(source, _sorted_pair)


def petersen_graph() -> MultiGraph:
    return MultiGraph.from_networkx(nx.petersen_graph(), _sorted_pair)


def hypercube_graph(n: int, multiplicity: int = 1) -> MultiGraph:
    """Q_n on the integers 0..2^n - 1; edge (u, bit) flips `bit` of u."""
    source = nx.relabel_nodes(
        nx.hypercube_graph(n),
        lambda bits: sum(bit << position for position, bit in enumerate(bits)),
    )
    graph = MultiGraph.from_networkx(source, lambda u, v: (min(u, v), (u ^ v).bit_length() - 1))
    return graph.extender(multiplicity) if multiplicity > 1 else graph
