from collections import defaultdict
from functools import cached_property
from typing import Hashable, Mapping, Optional, Sequence

from graphviz import Graph
from pydantic import BaseModel, Field

from src.coset_graphs.multigraph import MultiGraph
from src.coset_graphs.utils import EdgeExport, edge_names, graph_to_dot, vertex_names
from src.errors import InconsistentAction, InvalidGraph
from src.permutation_groups.cosets import CosetSpace
from src.permutation_groups.group import Group
from src.permutation_groups.perm import Perm
from src.rotary.cycles import CycleSeq


class FaceExport(BaseModel):
    id: str
    boundary_edges: list[str]
    boundary_vertices: list[str]


class MapExport(BaseModel):
    vertices: list[str]
    edges: list[EdgeExport]
    faces: list[FaceExport]
    chi: int = Field(description="Euler characteristic |V| - |E| + |F|")
    orientable: Optional[bool] = Field(default=None, description="None when not computed")


class CombMap:
    """
    A graph together with faces, each face carrying its boundary cycle.

    Maps built from a group keep that group and the coset spaces labelling
    vertices and edges, so that group elements act on vertices, edges and
    faces by right multiplication.
    """

    def __init__(
        self,
        graph: MultiGraph,
        faces: Sequence[tuple[Hashable, CycleSeq]],
        construction: str = "custom",
        group: Optional[Group] = None,
        vertex_space: Optional[CosetSpace] = None,
        edge_space: Optional[CosetSpace] = None,
        generators: Optional[Mapping[str, Perm]] = None,
        metadata: Optional[Mapping[str, str]] = None,
    ):
        self.graph = graph
        self.faces: dict = {}
        for label, boundary in faces:
            if label in self.faces:
                raise InvalidGraph(f"Duplicate face label {label!r}")
            boundary.validate(graph)
            self.faces[label] = boundary
        self.construction = construction
        self.group = group
        self.vertex_space = vertex_space
        self.edge_space = edge_space
        self.generators = dict(generators or {})
        self.metadata = dict(metadata or {})

    @cached_property
    def edge_faces(self) -> dict:
        incidence = defaultdict(list)
        for label, boundary in self.faces.items():
            for edge in boundary.edges:
                incidence[edge].append(label)
        return dict(incidence)

    @cached_property
    def _face_by_normal_form(self) -> dict:
        return {boundary.normal_form: label for label, boundary in self.faces.items()}

    @property
    def chi(self) -> int:
        return len(self.graph.vertices) - len(self.graph.edges) + len(self.faces)

    def face_lengths(self) -> list[int]:
        return [len(boundary) for boundary in self.faces.values()]

    def boundary(self, face: Hashable) -> CycleSeq:
        return self.faces[face]

    def act_vertex(self, vertex: Perm, g: Perm) -> Perm:
        return self.vertex_space.act(vertex, g)

    def act_edge(self, edge: Perm, g: Perm) -> Perm:
        return self.edge_space.act(edge, g)

    def act_face(self, face: Hashable, g: Perm) -> Hashable:
        image = self.faces[face].image(lambda v: self.act_vertex(v, g), lambda e: self.act_edge(e, g))
        try:
            return self._face_by_normal_form[image.normal_form]
        except KeyError:
            raise InconsistentAction(
                "A group element maps a face boundary to a cycle that bounds no face",
                location=repr(face),
            ) from None

    def relabel(self, vertex_map: Mapping, edge_map: Mapping) -> "CombMap":
        """Transport the map along bijections of its vertices and edges; face labels are kept."""
        graph = self.graph.relabel(vertex_map, edge_map)
        faces = [
            (label, boundary.image(vertex_map.__getitem__, edge_map.__getitem__))
            for label, boundary in self.faces.items()
        ]
        return CombMap(graph, faces, construction=self.construction, metadata=self.metadata)

    def to_export(self, orientable: Optional[bool] = None) -> MapExport:
        vertex_ids = vertex_names(self.graph)
        edge_ids = edge_names(self.graph)
        faces = []
        for position, boundary in enumerate(self.faces.values()):
            cycle = boundary.to_export(vertex_ids, edge_ids)
            faces.append(FaceExport(id=f"f{position}", boundary_edges=cycle.edges, boundary_vertices=cycle.vertices))
        return MapExport(
            vertices=list(vertex_ids.values()),
            edges=[EdgeExport(id=edge_ids[e], ends=[vertex_ids[end] for end in self.graph.ends(e)]) for e in self.graph.edges],
            faces=faces,
            chi=self.chi,
            orientable=orientable,
        )

    def to_dot(self) -> Graph:
        export = self.to_export()
        comment = "; ".join(f"{face.id}: {' '.join(face.boundary_edges)}" for face in export.faces)
        return graph_to_dot(self.graph, name=self.construction, comment=comment)

    def __repr__(self) -> str:
        return (
            f"CombMap({self.construction}: V={len(self.graph.vertices)}, "
            f"E={len(self.graph.edges)}, F={len(self.faces)})"
        )
