from collections import Counter
from enum import Enum
from typing import Hashable, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.config import CFG
from src.errors import (
    CrossCheckFailed,
    InconsistentAction,
    LabelMismatch,
    NotASubgroup,
    RotaryError,
    SearchCapExceeded,
)
from src.maps.combinatorial_map import CombMap
from src.maps.constructions import biro_map, rota_map
from src.maps.surface import FlagSystem, flag_system, surface_check
from src.permutation_groups.group import Group, conjugate, cyclic, intersect
from src.permutation_groups.perm import Perm
from src.rotary.cycles import classify_induced
from src.rotary.pairs import RotaryPair


class MapKind(str, Enum):
    Rotary = "Rotary"
    BiRotary = "BiRotary"

    @property
    def type_label(self) -> str:
        return "2^Pex" if self is MapKind.Rotary else "2*ex"


class MapKernels(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    G_V: Group = Field(description="Kernel of the action on vertices")
    G_VF: Group = Field(description="Kernel of the action on vertices and faces")
    circular: bool = Field(description="Whether every face boundary is a simple cycle")


def _formula_kernels(M: CombMap) -> tuple[Group, Group, Group]:
    """(vertex stabiliser, G_(V), G_(V∪F)) as given by the construction's generators."""
    names = M.generators
    if M.construction in ("RotaMap", "BiRoMap"):
        a, z = names["a"], names["z"]
        A = cyclic(a)
        partner = a * z if M.construction == "RotaMap" else z * z.conj(a)
        return A, intersect(A, conjugate(A, z)), intersect(A, cyclic(partner))
    if M.construction == "RegMap":
        x, y, z = names["x"], names["y"], names["z"]
        A = cyclic(x * y)
        vertex_stabilizer = M.vertex_space.subgroup
        return vertex_stabilizer, intersect(A, conjugate(A, z)), intersect(A, cyclic(z * y))
    raise RotaryError(f"No kernel formula for construction {M.construction!r}", location="map_kernels")


def _fixes_all_faces(M: CombMap, g: Perm) -> bool:
    return all(M.act_face(face, g) == face for face in M.faces)


def map_kernels(M: CombMap) -> MapKernels:
    """
    Kernels of the builder group on V and on V ∪ F, from the construction
    formulas, each cross-checked against the kernel computed directly.
    """
    vertex_stabilizer, formula_V, formula_VF = _formula_kernels(M)
    G = M.group
    direct_V = Group.from_elements(
        G.degree,
        (g for g in vertex_stabilizer.elements if all(M.act_vertex(v, g) == v for v in M.graph.vertices)),
        G.cap,
    )
    direct_VF = Group.from_elements(G.degree, (g for g in direct_V.elements if _fixes_all_faces(M, g)), G.cap)

    if direct_V != formula_V:
        raise CrossCheckFailed(
            f"Vertex kernel has order {direct_V.order}, formula gives {formula_V.order}",
            location=f"{M.construction}.G_V",
        )
    if direct_VF != formula_VF:
        raise CrossCheckFailed(
            f"Vertex-face kernel has order {direct_VF.order}, formula gives {formula_VF.order}",
            location=f"{M.construction}.G_VF",
        )

    circular = direct_VF.order == 1
    simple_boundaries = all(classify_induced(boundary).tag == "SimpleCycle" for boundary in M.faces.values())
    if circular != simple_boundaries:
        raise CrossCheckFailed("Faithfulness on V∪F disagrees with the face boundaries", location=M.construction)
    return MapKernels(G_V=direct_V, G_VF=direct_VF, circular=circular)


def face_stabilizer(M: CombMap, face: Hashable) -> Group:
    G = M.group
    return Group.from_elements(G.degree, (g for g in G.elements if M.act_face(face, g) == face), G.cap)


def maps_equal(first: CombMap, second: CombMap) -> bool:
    """Same labelled graph and the same faces as sequence classes."""
    if set(first.graph.vertices) != set(second.graph.vertices) or set(first.graph.edges) != set(second.graph.edges):
        raise LabelMismatch("The maps do not share their vertex and edge labels", location="maps_equal")
    first_faces = Counter(boundary.normal_form for boundary in first.faces.values())
    second_faces = Counter(boundary.normal_form for boundary in second.faces.values())
    return first_faces == second_faces


def _seeded_match(first: FlagSystem, second: FlagSystem, seed: int, target: int, taken: set) -> Optional[dict]:
    mapping = {seed: target}
    used = {target}
    queue = [seed]
    pairs = ((first.r0, second.r0), (first.r1, second.r1), (first.r2, second.r2))
    for flag in queue:
        for mine, theirs in pairs:
            source = mine[flag]
            image = theirs[mapping[flag]]
            if source in mapping:
                if mapping[source] != image:
                    return None
            elif image in used or image in taken:
                return None
            else:
                mapping[source] = image
                used.add(image)
                queue.append(source)
    return mapping


def map_isomorphic(first: CombMap, second: CombMap, budget: Optional[int] = None) -> bool:
    """
    Maps are isomorphic exactly when their flag systems are: a bijection of
    flags commuting with r0, r1 and r2 induces the bijections of vertices,
    edges and faces. On each connected piece such a bijection is fixed by
    the image of a single flag.
    """
    budget = CFG.isomorphism_budget if budget is None else budget
    if (
        len(first.graph.vertices) != len(second.graph.vertices)
        or len(first.graph.edges) != len(second.graph.edges)
        or sorted(first.face_lengths()) != sorted(second.face_lengths())
    ):
        return False
    surface_check(first)
    surface_check(second)
    flags_first, flags_second = flag_system(first), flag_system(second)

    steps = 0
    taken: set = set()
    unmatched = flags_second.components()
    for component in flags_first.components():
        matched = None
        for candidate in unmatched:
            if len(candidate) != len(component):
                continue
            for target in candidate:
                steps += len(component)
                if steps > budget:
                    raise SearchCapExceeded(f"Map isomorphism search exceeded {budget} steps", location="map_isomorphic")
                if _seeded_match(flags_first, flags_second, component[0], target, taken) is not None:
                    matched = candidate
                    break
            if matched is not None:
                break
        if matched is None:
            return False
        unmatched.remove(matched)
        taken.update(matched)
    logger.debug(f"Map isomorphism found after {steps} steps")
    return True


def _orbit(start, elements: list[Perm], act) -> set:
    seen = {start}
    queue = [start]
    for item in queue:
        for g in elements:
            image = act(item, g)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def _base_arc(M: CombMap, rp: RotaryPair) -> tuple[Perm, Perm]:
    """A vertex with stabiliser <a> and an edge at it with stabiliser <z> inside <a, z>."""
    generators = [rp.a, rp.z]
    vertex_orbit_size = rp.G.order // rp.A.order
    for vertex in M.graph.vertices:
        if M.act_vertex(vertex, rp.a) != vertex:
            continue
        if len(_orbit(vertex, generators, M.act_vertex)) != vertex_orbit_size:
            continue
        for edge in M.graph.incident_edges(vertex):
            if M.act_edge(edge, rp.z) != edge:
                continue
            if len(_orbit(edge, generators, M.act_edge)) == rp.G.order // 2:
                return vertex, edge
    raise InconsistentAction("No arc of the map is stabilised by <a> and <z>", location="classify_vertex_rotary")


def classify_vertex_rotary(M: CombMap, rp: RotaryPair) -> MapKind:
    """
    Look at the two faces on the base edge: z swapping them makes the map
    rotary, z fixing both makes it bi-rotary. The verdict is confirmed by
    transporting RotaMap or BiRoMap of the pair onto the map's labels.
    """
    if M.group is None or rp.a not in M.group or rp.z not in M.group:
        raise NotASubgroup("The pair does not act on the map", location="classify_vertex_rotary")
    if len(M.graph.vertices) != rp.G.order // rp.A.order:
        raise InconsistentAction("<a, z> cannot be regular on the arcs of this map", location="classify_vertex_rotary")

    alpha, edge = _base_arc(M, rp)
    first, second = M.edge_faces[edge]
    first_image, second_image = M.act_face(first, rp.z), M.act_face(second, rp.z)

    if first_image == second and second_image == first:
        kind = MapKind.Rotary
    elif first_image == first and second_image == second:
        kind = MapKind.BiRotary
    else:
        raise InconsistentAction("z neither swaps nor fixes the faces at the base edge", location=repr(edge))

    reference = rota_map(rp) if kind is MapKind.Rotary else biro_map(rp)
    vertex_map = {rep: M.act_vertex(alpha, rep) for rep in rp.vertex_space.reps}
    edge_map = {rep: M.act_edge(edge, rep) for rep in rp.edge_space.reps}
    if not maps_equal(reference.relabel(vertex_map, edge_map), M):
        raise CrossCheckFailed(f"Map is not the {reference.construction} of the pair", location="classify_vertex_rotary")

    logger.info(f"Classified {M.construction} as {kind.value} ({kind.type_label})")
    return kind


def flag_regular_check(M: CombMap, G: Group) -> bool:
    """Whether G, acting on the map, is regular on its flags."""
    if M.group is None or not G.is_subgroup_of(M.group):
        raise NotASubgroup("The group does not act on the map", location="flag_regular_check")
    system = flag_system(M)
    if len(system) < 1:
        return False

    def act_flag(flag: tuple, g: Perm) -> tuple:
        vertex, edge, face = flag
        return M.act_vertex(vertex, g), M.act_edge(edge, g), M.act_face(face, g)

    orbit = _orbit(system.flags[0], list(G.generators), act_flag)
    if len(orbit) != len(system):
        return False

    kernel = [
        g for g in G.elements
        if all(M.act_vertex(v, g) == v for v in M.graph.vertices)
        and all(M.act_edge(e, g) == e for e in M.graph.edges)
        and _fixes_all_faces(M, g)
    ]
    return G.order // len(kernel) == len(system)
