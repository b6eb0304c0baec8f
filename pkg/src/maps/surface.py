from typing import Hashable

from loguru import logger
from pydantic import BaseModel, Field

from src.errors import NotASurface
from src.maps.combinatorial_map import CombMap


class SurfaceReport(BaseModel):
    chi: int = Field(description="Euler characteristic |V| - |E| + |F|")
    flags: int = Field(description="Number of (vertex, edge, face) flags, 4|E| on a surface")


class FlagSystem:
    """
    Flags (v, e, f) of a map with the three involutions: r0 changes the
    vertex, r1 the edge (within the face, at the same vertex) and r2 the face.
    """

    def __init__(self, M: CombMap):
        self.flags: list[tuple] = []
        self.index: dict[tuple, int] = {}
        r1_pairs = []

        for face, boundary in M.faces.items():
            length = len(boundary)
            for i, edge in enumerate(boundary.edges):
                self._add((boundary.vertices[i], edge, face))
                self._add((boundary.vertices[(i + 1) % length], edge, face))
            for i, edge in enumerate(boundary.edges):
                vertex = boundary.vertices[(i + 1) % length]
                following = boundary.edges[(i + 1) % length]
                r1_pairs.append(((vertex, edge, face), (vertex, following, face)))

        size = len(self.flags)
        self.r0 = [0] * size
        self.r1 = [0] * size
        self.r2 = [0] * size

        for position, (vertex, edge, face) in enumerate(self.flags):
            self.r0[position] = self.index[(M.graph.other_end(edge, vertex), edge, face)]
            faces = M.edge_faces.get(edge, [])
            if len(faces) != 2 or faces[0] == faces[1]:
                raise NotASurface(f"Edge lies on {len(faces)} face sides instead of two distinct faces", location=repr(edge))
            other_face = faces[1] if faces[0] == face else faces[0]
            self.r2[position] = self.index[(vertex, edge, other_face)]
        for first, second in r1_pairs:
            self.r1[self.index[first]] = self.index[second]
            self.r1[self.index[second]] = self.index[first]

    def _add(self, flag: tuple) -> None:
        self.index[flag] = len(self.flags)
        self.flags.append(flag)

    def __len__(self) -> int:
        return len(self.flags)

    def orbit(self, start: int, involutions: list[list[int]]) -> set[int]:
        seen = {start}
        queue = [start]
        for flag in queue:
            for involution in involutions:
                image = involution[flag]
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        return seen

    def components(self) -> list[list[int]]:
        found = []
        seen = set()
        for start in range(len(self.flags)):
            if start in seen:
                continue
            orbit = self.orbit(start, [self.r0, self.r1, self.r2])
            seen |= orbit
            found.append(sorted(orbit))
        return found


def flag_system(M: CombMap) -> FlagSystem:
    return FlagSystem(M)


def _check_umbrellas(M: CombMap, system: FlagSystem) -> None:
    at_vertex: dict[Hashable, list[int]] = {vertex: [] for vertex in M.graph.vertices}
    for position, (vertex, _, _) in enumerate(system.flags):
        at_vertex[vertex].append(position)

    for vertex, flags in at_vertex.items():
        if not flags:
            raise NotASurface("Vertex lies on no face", location=repr(vertex))
        if len(flags) != 2 * M.graph.degree(vertex):
            raise NotASurface("Flags at the vertex do not cover every edge-end twice", location=repr(vertex))
        if len(system.orbit(flags[0], [system.r1, system.r2])) != len(flags):
            raise NotASurface("Edges and faces around the vertex do not close into one umbrella", location=repr(vertex))


def surface_check(M: CombMap) -> SurfaceReport:
    """
    Certify that the faces close up into a surface: every edge on exactly
    two faces and a single umbrella at every vertex.
    """
    system = flag_system(M)
    _check_umbrellas(M, system)
    if len(system) != 4 * len(M.graph.edges):
        raise NotASurface(f"{len(system)} flags for {len(M.graph.edges)} edges", location="flags")

    report = SurfaceReport(chi=M.chi, flags=len(system))
    logger.debug(f"Surface check passed: chi={report.chi}, flags={report.flags}")
    return report


def _directions(boundary) -> dict:
    length = len(boundary)
    return {
        edge: (boundary.vertices[i], boundary.vertices[(i + 1) % length])
        for i, edge in enumerate(boundary.edges)
    }


def orientability(M: CombMap) -> bool:
    """
    Try to orient every face so that each edge is traversed once in each
    direction, propagating orientations across shared edges.
    """
    surface_check(M)
    directions = {face: _directions(boundary) for face, boundary in M.faces.items()}
    sign: dict = {}

    for root in M.faces:
        if root in sign:
            continue
        sign[root] = 1
        queue = [root]
        for face in queue:
            for edge, (tail, head) in directions[face].items():
                if sign[face] < 0:
                    tail, head = head, tail
                for other in M.edge_faces[edge]:
                    if other == face:
                        continue
                    other_tail, _ = directions[other][edge]
                    required = 1 if other_tail == head else -1
                    if other not in sign:
                        sign[other] = required
                        queue.append(other)
                    elif sign[other] != required:
                        return False
    return True


def flag_graph_bipartite(M: CombMap) -> bool:
    """Independent orientability test: the flag graph is bipartite."""
    system = flag_system(M)
    colour: dict[int, int] = {}
    for root in range(len(system)):
        if root in colour:
            continue
        colour[root] = 0
        queue = [root]
        for flag in queue:
            for involution in (system.r0, system.r1, system.r2):
                image = involution[flag]
                if image not in colour:
                    colour[image] = 1 - colour[flag]
                    queue.append(image)
                elif colour[image] == colour[flag]:
                    return False
    return True
