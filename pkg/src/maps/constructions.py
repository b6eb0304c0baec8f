from functools import cached_property
from typing import Optional

from loguru import logger

from src.coset_graphs.construction import CosetGraph
from src.errors import (
    CrossCheckFailed,
    DegenerateGraph,
    DegreeMismatch,
    FaceLengthTooSmall,
    FewFaces,
    NotCommuting,
    NotDistinct,
    NotInvolution,
    ValencyTooSmall,
    ZInsideXY,
)
from src.maps.combinatorial_map import CombMap
from src.permutation_groups.cosets import CosetSpace, action_kernel, coset_space
from src.permutation_groups.group import Group, conjugate, cyclic, generated, intersect
from src.permutation_groups.perm import Perm, element_order
from src.rotary.cycles import CycleSeq
from src.rotary.pairs import CycleKind, RotaryPair, canonical_cycle_sequence, require_general


def _translate(cycle: CycleSeq, g: Perm, vertex_space: CosetSpace, edge_space: CosetSpace) -> CycleSeq:
    return cycle.image(lambda v: vertex_space.act(v, g), lambda e: edge_space.act(e, g))


def _require_faces(face_space: CosetSpace, construction: str) -> None:
    if len(face_space) < 3:
        raise FewFaces(f"{construction} would have only {len(face_space)} faces", location=construction)


def rota_map(rp: RotaryPair) -> CombMap:
    """Faces are the cosets of <az>; the face <az>g is bounded by C(az)g."""
    require_general(rp)
    cycle = canonical_cycle_sequence(rp, CycleKind.AZ)
    face_space = coset_space(rp.G, cyclic(rp.az))
    _require_faces(face_space, "RotaMap")

    faces = [(rep, _translate(cycle, rep, rp.vertex_space, rp.edge_space)) for rep in face_space.reps]
    logger.info(f"RotaMap: {len(rp.graph.vertices)} vertices, {len(rp.graph.edges)} edges, {len(faces)} faces of length {rp.m}")
    return CombMap(
        rp.graph,
        faces,
        construction="RotaMap",
        group=rp.G,
        vertex_space=rp.vertex_space,
        edge_space=rp.edge_space,
        generators={"a": rp.a, "z": rp.z},
        metadata={"type": "2^Pex"},
    )


def biro_map(rp: RotaryPair) -> CombMap:
    """
    Faces are the images of C(zz^a) under G, one per coset of
    W = <z, z^a>, each keyed by the normal form of its boundary.
    """
    require_general(rp)
    cycle = canonical_cycle_sequence(rp, CycleKind.ZZa)
    face_space = coset_space(rp.G, rp.W)
    _require_faces(face_space, "BiRoMap")

    boundaries = [_translate(cycle, rep, rp.vertex_space, rp.edge_space) for rep in face_space.reps]
    faces = [(boundary.normal_form, boundary) for boundary in boundaries]
    if len({label for label, _ in faces}) != len(face_space):
        raise CrossCheckFailed("Distinct cosets of W gave the same face boundary", location="BiRoMap")

    logger.info(f"BiRoMap: {len(rp.graph.vertices)} vertices, {len(rp.graph.edges)} edges, {len(faces)} faces of length {2 * rp.ell}")
    return CombMap(
        rp.graph,
        faces,
        construction="BiRoMap",
        group=rp.G,
        vertex_space=rp.vertex_space,
        edge_space=rp.edge_space,
        generators={"a": rp.a, "z": rp.z},
        metadata={"type": "2*ex"},
    )


class FlagRegularTriple:
    """
    Involutions (x, y, z) with xz = zx and z outside <x, y>.

    a = xy rotates about the base vertex and b = zy about the base face;
    H = <x, y>, J = <x, z> and W = <y, z> are the stabilisers of the base
    vertex, edge and face.
    """

    def __init__(self, x: Perm, y: Perm, z: Perm, cap: Optional[int] = None):
        if len({x.degree, y.degree, z.degree}) != 1:
            raise DegreeMismatch("x, y and z must share one degree", location="triple")
        for name, element in (("x", x), ("y", y), ("z", z)):
            if element_order(element) != 2:
                raise NotInvolution(f"{name} has order {element_order(element)}, not 2", location=name)
        if x == y or y == z or x == z:
            raise NotDistinct("x, y and z must be distinct", location="triple")
        if not x.commutes_with(z):
            raise NotCommuting("x and z do not commute", location="triple")

        self.x, self.y, self.z = x, y, z
        self.H = generated([x, y], cap=cap)
        if z in self.H:
            raise ZInsideXY("z lies in <x, y>", location="z")
        self.J = generated([x, z], cap=cap)
        self.W = generated([y, z], cap=cap)
        self.G = generated([x, y, z], cap=cap)
        self.a = x * y
        self.b = z * y

        if self.k * self.lam < 3:
            raise ValencyTooSmall(f"k*lambda = {self.k * self.lam} is below 3", location="triple")
        if self.m < 3:
            raise FaceLengthTooSmall(f"|zy| = {self.m} is below 3", location="triple")

    @cached_property
    def vertex_kernel_formula(self) -> Group:
        A = cyclic(self.a)
        return intersect(A, conjugate(A, self.z))

    @property
    def lam(self) -> int:
        return self.vertex_kernel_formula.order

    @property
    def k(self) -> int:
        return element_order(self.a) // self.lam

    @property
    def m(self) -> int:
        return element_order(self.b)

    @cached_property
    def face_kernel_formula(self) -> Group:
        return intersect(cyclic(self.a), cyclic(self.b))

    @property
    def lam_p(self) -> int:
        return self.face_kernel_formula.order

    @cached_property
    def coset_graph(self) -> CosetGraph:
        return CosetGraph(self.G, self.H, self.J)

    def parameters(self) -> dict:
        return {"order": self.G.order, "k": self.k, "lambda": self.lam, "m": self.m, "lambda_p": self.lam_p}

    def __repr__(self) -> str:
        return f"FlagRegularTriple(|G|={self.G.order}, k={self.k}, lambda={self.lam}, m={self.m})"


def validate_flag_regular_triple(x: Perm, y: Perm, z: Perm, cap: Optional[int] = None) -> FlagRegularTriple:
    triple = FlagRegularTriple(x, y, z, cap)
    logger.debug(f"Validated flag-regular triple: {triple.parameters()}")
    return triple


def reg_map(t: FlagRegularTriple) -> CombMap:
    """Faces are the cosets of W = <y, z>; the face Wg is bounded by C(W)g with C(W) = (J b^i)."""
    construction = t.coset_graph
    if construction.params.k <= 2:
        raise DegenerateGraph(
            f"Cos(G, <x,y>, <x,z>) has valency {construction.params.k}; it is K_2^(lambda) or C_n^(lambda)",
            location="RegMap",
        )

    cycle = CycleSeq.from_edges(construction.graph, [construction.edge_of(t.b**i) for i in range(t.m)])
    face_space = coset_space(t.G, t.W)
    _require_faces(face_space, "RegMap")

    faces = [
        (rep, _translate(cycle, rep, construction.vertex_space, construction.edge_space))
        for rep in face_space.reps
    ]
    logger.info(f"RegMap: {len(construction.graph.vertices)} vertices, {len(construction.graph.edges)} edges, {len(faces)} faces of length {t.m}")
    return CombMap(
        construction.graph,
        faces,
        construction="RegMap",
        group=t.G,
        vertex_space=construction.vertex_space,
        edge_space=construction.edge_space,
        generators={"x": t.x, "y": t.y, "z": t.z},
    )


def regmap_vertex_kernel(t: FlagRegularTriple) -> Group:
    """<a> ∩ <a^z> = <a^k>, the kernel of G on the vertices of RegMap; normal in G."""
    formula = t.vertex_kernel_formula
    direct = action_kernel(t.G, t.H)
    if formula != direct or not formula.is_normal_in(t.G):
        raise CrossCheckFailed(
            f"<a>∩<a^z> has order {formula.order}, the vertex kernel has order {direct.order}",
            location="RegMap.G_V",
        )
    return formula
