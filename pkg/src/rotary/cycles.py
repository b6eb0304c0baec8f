from functools import cached_property
from typing import Callable, Hashable, Literal, Optional, Sequence

from pydantic import BaseModel, Field

from src.coset_graphs.multigraph import MultiGraph
from src.errors import InvalidGraph
from src.permutation_groups.cosets import CosetSpace
from src.permutation_groups.group import Group


def edge_normal_form(edges: Sequence[Hashable]) -> tuple:
    """Least rotation of the edge sequence or of its reversal."""
    edges = tuple(edges)
    return min(
        sequence[shift:] + sequence[:shift]
        for sequence in (edges, edges[::-1])
        for shift in range(len(sequence))
    )


class CycleExport(BaseModel):
    edges: list[str] = Field(description="Edge identifiers in traversal order")
    vertices: list[str] = Field(description="Vertex trace; vertices[i] and vertices[i+1] are the ends of edges[i]")


class CycleSeq:
    """
    A cycle (e_0, ..., e_{l-1}) of pairwise distinct edges with its vertex
    trace: vertices[i] and vertices[i+1 mod l] are the ends of edges[i].
    Two cycles describe the same boundary when they agree up to rotation
    and reversal.
    """

    def __init__(self, edges: Sequence[Hashable], vertices: Sequence[Hashable]):
        self.edges = tuple(edges)
        self.vertices = tuple(vertices)
        if len(self.edges) != len(self.vertices):
            raise InvalidGraph("A cycle needs one trace vertex per edge")
        if len(set(self.edges)) != len(self.edges):
            raise InvalidGraph("Cycle edges must be pairwise distinct")

    @classmethod
    def from_edges(cls, graph: MultiGraph, edges: Sequence[Hashable]) -> "CycleSeq":
        """Recover the vertex trace by walking the edges from either end of the first one."""
        edges = tuple(edges)
        if not edges:
            raise InvalidGraph("Empty cycle")
        for start in graph.ends(edges[0]):
            trace = [start]
            current = start
            for edge in edges:
                if current not in graph.ends(edge):
                    break
                current = graph.other_end(edge, current)
                trace.append(current)
            else:
                if current == start:
                    return cls(edges, trace[:-1])
        raise InvalidGraph("Edge sequence is not a closed walk", location=repr(edges[0]))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def length(self) -> int:
        return len(self.edges)

    @cached_property
    def normal_form(self) -> tuple:
        return edge_normal_form(self.edges)

    def rotate(self, shift: int) -> "CycleSeq":
        shift %= len(self.edges)
        return CycleSeq(self.edges[shift:] + self.edges[:shift], self.vertices[shift:] + self.vertices[:shift])

    def reversed(self) -> "CycleSeq":
        return CycleSeq(self.edges[::-1], (self.vertices[0],) + self.vertices[:0:-1])

    def image(self, vertex_map: Callable, edge_map: Callable) -> "CycleSeq":
        return CycleSeq([edge_map(edge) for edge in self.edges], [vertex_map(vertex) for vertex in self.vertices])

    def validate(self, graph: MultiGraph) -> None:
        for position, edge in enumerate(self.edges):
            following = self.vertices[(position + 1) % len(self.vertices)]
            if {self.vertices[position], following} != set(graph.ends(edge)):
                raise InvalidGraph(f"Cycle step {position} is not an incidence of the graph", location=repr(edge))

    def to_export(self, vertex_ids: dict, edge_ids: dict) -> CycleExport:
        return CycleExport(
            edges=[edge_ids[edge] for edge in self.edges],
            vertices=[vertex_ids[vertex] for vertex in self.vertices],
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CycleSeq) and self.edges == other.edges and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash((self.edges, self.vertices))

    def __repr__(self) -> str:
        return f"CycleSeq(length={len(self.edges)}, distinct_vertices={len(set(self.vertices))})"


class RegularCycleKind(BaseModel):
    tag: Literal["SimpleCycle", "ExtendedCycle", "DoubledPair", "NotRegular"]
    n: Optional[int] = Field(default=None, description="Number of distinct vertices")
    multiplicity: Optional[int] = Field(default=None, description="Edge-multiplicity of the induced subgraph")

    @property
    def label(self) -> str:
        if self.tag == "SimpleCycle":
            return f"C_{self.n}"
        if self.tag == "ExtendedCycle":
            return f"C_{self.n}^({self.multiplicity})"
        if self.tag == "DoubledPair":
            return f"K_2^({self.multiplicity})"
        return "not regular"


def classify_induced(cycle: CycleSeq) -> RegularCycleKind:
    """Identify the subgraph induced by a cycle from the periodicity of its vertex trace."""
    trace = cycle.vertices
    length = len(trace)
    distinct = len(set(trace))
    periodic = length % distinct == 0 and all(trace[i] == trace[i % distinct] for i in range(length))

    if distinct == length and length >= 3:
        return RegularCycleKind(tag="SimpleCycle", n=length, multiplicity=1)
    if periodic and distinct >= 3:
        return RegularCycleKind(tag="ExtendedCycle", n=distinct, multiplicity=length // distinct)
    if periodic and distinct == 2 and length >= 4:
        return RegularCycleKind(tag="DoubledPair", n=2, multiplicity=length)
    return RegularCycleKind(tag="NotRegular")


def seq_class_equal(first: CycleSeq, second: CycleSeq) -> bool:
    return first.normal_form == second.normal_form


def cycle_stabilizer(G: Group, cycle: CycleSeq, edge_space: CosetSpace) -> Group:
    """Elements of G mapping the cycle onto a rotation or reversal of itself."""
    target = cycle.normal_form
    members = []
    for element in G.elements:
        image = tuple(edge_space.act(edge, element) for edge in cycle.edges)
        if edge_normal_form(image) == target:
            members.append(element)
    return Group.from_elements(G.degree, members, G.cap)
