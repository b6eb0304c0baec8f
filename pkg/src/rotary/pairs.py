from enum import Enum
from functools import cached_property
from typing import Literal, Optional

from loguru import logger
from pydantic import BaseModel, Field

from src.coset_graphs.construction import CosetGraph, GraphParams
from src.coset_graphs.multigraph import MultiGraph
from src.errors import CrossCheckFailed, DegenerateGraph, DegreeMismatch, ZInsideA, ZNotInvolution
from src.permutation_groups.cosets import action_kernel
from src.permutation_groups.group import Group, conjugate, cyclic, generated, intersect
from src.permutation_groups.perm import Perm, element_order
from src.rotary.cycles import CycleSeq, cycle_stabilizer


class CycleKind(str, Enum):
    AZ = "az"
    AinvZ = "a^-1z"
    ZZa = "zz^a"
    ZZainv = "zz^a^-1"

    @property
    def mirrored(self) -> bool:
        return self in (CycleKind.AinvZ, CycleKind.ZZainv)


class RotaryPair:
    """
    A rotary pair (a, z): z an involution outside <a>, G = <a, z>.

    G acts regularly on the arcs of Cos(G, <a>, <z>), with <a> rotating the
    edges at the base vertex <a>. Derived parameters are cached.
    """

    def __init__(self, a: Perm, z: Perm, cap: Optional[int] = None):
        if a.degree != z.degree:
            raise DegreeMismatch("a and z must share one degree", location="pair")
        if element_order(z) != 2:
            raise ZNotInvolution(f"z has order {element_order(z)}, not 2", location="z")
        self.a = a
        self.z = z
        self.A = cyclic(a)
        if z in self.A:
            raise ZInsideA("z lies in <a>", location="z")
        self.Z = cyclic(z)
        self.G = generated([a, z], cap=cap)

    @cached_property
    def coset_graph(self) -> CosetGraph:
        return CosetGraph(self.G, self.A, self.Z, g=self.z)

    @property
    def graph(self) -> MultiGraph:
        return self.coset_graph.graph

    @property
    def vertex_space(self):
        return self.coset_graph.vertex_space

    @property
    def edge_space(self):
        return self.coset_graph.edge_space

    @cached_property
    def vertex_kernel_formula(self) -> Group:
        return intersect(self.A, conjugate(self.A, self.z))

    @property
    def lam(self) -> int:
        return self.vertex_kernel_formula.order

    @property
    def k(self) -> int:
        return self.A.order // self.lam

    @cached_property
    def az(self) -> Perm:
        return self.a * self.z

    @cached_property
    def zza(self) -> Perm:
        return self.z * self.z.conj(self.a)

    @property
    def m(self) -> int:
        return element_order(self.az)

    @property
    def ell(self) -> int:
        return element_order(self.zza)

    @cached_property
    def face_kernel_rotary(self) -> Group:
        """<a> ∩ <az>."""
        return intersect(self.A, cyclic(self.az))

    @cached_property
    def face_kernel_birotary(self) -> Group:
        """<a> ∩ <zz^a>."""
        return intersect(self.A, cyclic(self.zza))

    @property
    def lam_p(self) -> int:
        return self.face_kernel_rotary.order

    @property
    def lam_pp(self) -> int:
        return self.face_kernel_birotary.order

    @cached_property
    def W(self) -> Group:
        """<z, z^a>, the stabiliser of C(zz^a)."""
        return generated([self.z, self.z.conj(self.a)], cap=self.G.cap)

    def parameters(self) -> dict:
        return {
            "order": self.G.order,
            "k": self.k,
            "lambda": self.lam,
            "m": self.m,
            "ell": self.ell,
            "lambda_p": self.lam_p,
            "lambda_pp": self.lam_pp,
        }

    def __repr__(self) -> str:
        return f"RotaryPair(|G|={self.G.order}, k={self.k}, lambda={self.lam})"


def validate_rotary_pair(a: Perm, z: Perm, cap: Optional[int] = None) -> RotaryPair:
    pair = RotaryPair(a, z, cap)
    logger.debug(f"Validated rotary pair: {pair.parameters()}")
    return pair


def vertex_rotary_graph(rp: RotaryPair) -> tuple[MultiGraph, GraphParams]:
    """Cos(<a,z>, <a>, <z>)."""
    return rp.coset_graph.graph, rp.coset_graph.params


class DegenerateClass(BaseModel):
    tag: Literal["TwoVertexExtender", "SimpleCycleGraph", "General"]
    r: Optional[int] = Field(default=None, description="Cycle length for SimpleCycleGraph")


def degenerate_class(rp: RotaryPair) -> DegenerateClass:
    if rp.k == 1:
        return DegenerateClass(tag="TwoVertexExtender")
    if rp.k == 2 and rp.lam == 1:
        return DegenerateClass(tag="SimpleCycleGraph", r=len(rp.graph.vertices))
    return DegenerateClass(tag="General")


def require_general(rp: RotaryPair) -> None:
    kind = degenerate_class(rp)
    if kind.tag != "General":
        raise DegenerateGraph(f"The pair gives a degenerate graph ({kind.tag})", location="pair")


def vertex_kernel(rp: RotaryPair) -> Group:
    """<a> ∩ <a^z>, cross-checked against the kernel of G on [G:<a>]."""
    formula = rp.vertex_kernel_formula
    direct = action_kernel(rp.G, rp.A)
    if formula != direct:
        raise CrossCheckFailed(
            f"<a>∩<a^z> has order {formula.order} but the vertex kernel has order {direct.order}",
            location="vertex_kernel",
        )
    return formula


def kernel_normality(rp: RotaryPair) -> bool:
    return rp.face_kernel_rotary.is_normal_in(rp.G) and rp.face_kernel_birotary.is_normal_in(rp.G)


def collapses_to_two_vertices(rp: RotaryPair) -> bool:
    """True when a face stabiliser barely exceeds its vertex kernel; the graph is then K_2^(lambda)."""
    az_group = cyclic(rp.az)
    return (
        az_group.order <= 2 * intersect(rp.A, az_group).order
        or rp.W.order <= 2 * intersect(rp.A, rp.W).order
    )


def _kind_element(rp: RotaryPair, kind: CycleKind) -> Perm:
    return ~rp.a if kind.mirrored else rp.a


def canonical_cycle_sequence(rp: RotaryPair, kind: CycleKind) -> CycleSeq:
    """
    C(az) = (<z>(az)^i) for the rotary kinds; C(zz^a) interleaves
    <z>(zz^a)^i and <z>a(zz^a)^i for the bi-rotary kinds. The mirrored
    kinds use a^-1 in place of a.
    """
    require_general(rp)
    a = _kind_element(rp, kind)
    z = rp.z
    edge_of = rp.edge_space.canonical

    if kind in (CycleKind.AZ, CycleKind.AinvZ):
        step = a * z
        edges = [edge_of(step**i) for i in range(element_order(step))]
    else:
        step = z * z.conj(a)
        edges = []
        for i in range(element_order(step)):
            power = step**i
            edges.append(edge_of(power))
            edges.append(edge_of(a * power))
    return CycleSeq.from_edges(rp.graph, edges)


def canonical_cycle(rp: RotaryPair, kind: CycleKind) -> tuple[CycleSeq, Group, int]:
    """
    Returns:
        The cycle, its set-wise stabiliser in G, and lambda' (rotary kinds)
        or lambda'' (bi-rotary kinds).
    """
    cycle = canonical_cycle_sequence(rp, kind)
    stabilizer = cycle_stabilizer(rp.G, cycle, rp.edge_space)

    a = _kind_element(rp, kind)
    if kind in (CycleKind.AZ, CycleKind.AinvZ):
        partner = cyclic(a * rp.z)
    else:
        partner = cyclic(rp.z * rp.z.conj(a))
    return cycle, stabilizer, intersect(rp.A, partner).order
