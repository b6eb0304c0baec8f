from functools import cached_property
from math import isinf
from typing import Hashable, Iterable, Mapping, Optional

import networkx as nx

from src.errors import InvalidGraph


class MultiGraph:
    """
    A finite graph (V, E, I) in which every edge joins two distinct vertices
    and any number of edges may join the same pair.

    Storage is an ``nx.MultiGraph`` keyed by edge label; the declared
    orientation of each edge is kept separately so ``ends`` is stable.
    Vertex and edge labels are arbitrary hashable, mutually comparable
    values; coset graphs use canonical coset representatives.
    """

    def __init__(self, vertices: Iterable[Hashable], edges: Iterable[tuple[Hashable, tuple[Hashable, Hashable]]]):
        self.vertices: tuple = tuple(vertices)
        self._graph = nx.MultiGraph()
        self._graph.add_nodes_from(self.vertices)
        if self._graph.number_of_nodes() != len(self.vertices):
            raise InvalidGraph("Duplicate vertex labels")

        self._ends: dict = {}
        for label, (u, v) in edges:
            if label in self._ends:
                raise InvalidGraph(f"Duplicate edge label {label!r}")
            if u == v:
                raise InvalidGraph(f"Edge {label!r} is a loop", location=str(label))
            if u not in self._graph or v not in self._graph:
                raise InvalidGraph(f"Edge {label!r} has an endpoint outside the vertex set", location=str(label))
            self._ends[label] = (u, v)
            self._graph.add_edge(u, v, key=label)
        self.edges: tuple = tuple(self._ends)

    @cached_property
    def simple_graph(self) -> nx.Graph:
        """Underlying simple graph with a `multiplicity` attribute per adjacent pair."""
        simple = nx.Graph()
        simple.add_nodes_from(self.vertices)
        for u, v in self._graph.edges():
            if not simple.has_edge(u, v):
                simple.add_edge(u, v, multiplicity=self._graph.number_of_edges(u, v))
        return simple

    def ends(self, edge: Hashable) -> tuple:
        return self._ends[edge]

    def other_end(self, edge: Hashable, vertex: Hashable) -> Hashable:
        u, v = self._ends[edge]
        if vertex == u:
            return v
        if vertex == v:
            return u
        raise InvalidGraph(f"Vertex {vertex!r} is not incident with edge {edge!r}")

    def incident_edges(self, vertex: Hashable) -> tuple:
        """E(vertex)."""
        return tuple(key for _, _, key in self._graph.edges(vertex, keys=True))

    def degree(self, vertex: Hashable) -> int:
        return self._graph.degree(vertex)

    def neighbours(self, vertex: Hashable) -> list:
        return list(self._graph.neighbors(vertex))

    def valency(self, vertex: Hashable) -> int:
        return len(self._graph[vertex])

    def edges_between(self, u: Hashable, v: Hashable) -> tuple:
        if not self._graph.has_edge(u, v):
            return ()
        return tuple(self._graph[u][v])

    def multiplicity(self, u: Hashable, v: Hashable) -> int:
        return self._graph.number_of_edges(u, v)

    def multiplicities(self) -> set[int]:
        return {data["multiplicity"] for _, _, data in self.simple_graph.edges(data=True)}

    def edge_multiplicity(self) -> Optional[int]:
        """The common multiplicity of all adjacent pairs, or None if it varies."""
        values = self.multiplicities()
        return values.pop() if len(values) == 1 else None

    def is_simple(self) -> bool:
        return self.multiplicities() <= {1}

    def is_regular(self) -> bool:
        return len({degree for _, degree in self._graph.degree()}) <= 1

    def degree_signature(self, vertex: Hashable) -> tuple:
        """(degree, sorted multiplicities towards the neighbours)."""
        return (
            self.degree(vertex),
            tuple(sorted(self.multiplicity(vertex, other) for other in self._graph.neighbors(vertex))),
        )

    def components(self) -> list[list]:
        order = {vertex: position for position, vertex in enumerate(self.vertices)}
        found = [sorted(component, key=order.__getitem__) for component in nx.connected_components(self._graph)]
        return sorted(found, key=lambda component: order[component[0]])

    def is_connected(self) -> bool:
        if len(self.vertices) <= 1:
            return True
        return nx.is_connected(self._graph)

    def girth(self) -> Optional[int]:
        """Length of a shortest cycle of the underlying simple graph; 2 when parallel edges exist."""
        if not self.is_simple():
            return 2
        length = nx.girth(self.simple_graph)
        return None if isinf(length) else int(length)

    def base(self) -> "MultiGraph":
        """The simple graph obtained by collapsing every parallel class."""
        edges = []
        for u, v in self.simple_graph.edges():
            label = min(self._graph[u][v])
            edges.append((label, self._ends[label]))
        edges.sort(key=lambda item: item[0])
        return MultiGraph(self.vertices, edges)

    def extender(self, mu: int) -> "MultiGraph":
        """The mu-extender: every edge e replaced by the parallel edges (e, 0), ..., (e, mu - 1)."""
        if mu < 1:
            raise InvalidGraph(f"Extender multiplicity must be positive, got {mu}")
        return MultiGraph(
            self.vertices,
            [((edge, copy), self._ends[edge]) for edge in self.edges for copy in range(mu)],
        )

    def relabel(self, vertex_map: Mapping, edge_map: Mapping) -> "MultiGraph":
        return MultiGraph(
            [vertex_map[vertex] for vertex in self.vertices],
            [(edge_map[edge], tuple(vertex_map[end] for end in self._ends[edge])) for edge in self.edges],
        )

    def subgraph_on_edges(self, edges: Iterable[Hashable]) -> "MultiGraph":
        """The edge-induced subgraph [C]."""
        edges = list(edges)
        vertices = []
        for edge in edges:
            for end in self._ends[edge]:
                if end not in vertices:
                    vertices.append(end)
        return MultiGraph(vertices, [(edge, self._ends[edge]) for edge in edges])

    @classmethod
    def from_networkx(cls, source: nx.Graph, edge_label=None) -> "MultiGraph":
        """
        Wrap a simple networkx graph, labelling each edge by ``edge_label(u, v)``
        (default ``(u, v)``). Vertices and edges are taken in sorted order.
        """
        edge_label = edge_label or (lambda u, v: (u, v))
        edges = sorted(((edge_label(u, v), (u, v)) for u, v in source.edges()), key=lambda item: item[0])
        return cls(sorted(source.nodes()), edges)

    def __repr__(self) -> str:
        return f"MultiGraph(vertices={len(self.vertices)}, edges={len(self.edges)})"
