from typing import Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from src.coset_graphs.multigraph import MultiGraph
from src.errors import BadIndex, CrossCheckFailed, DegreeMismatch, GInH, HEqualsG, InvalidGraph, NotArcTransitive, NotASubgroup
from src.permutation_groups.cosets import CosetSpace, coset_space, core
from src.permutation_groups.group import Group, conjugate, generated, intersect, join, subgroups
from src.permutation_groups.perm import Perm, element_order


class GraphParams(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True, populate_by_name=True)

    k: int = Field(description="Valency |H:K|")
    lam: int = Field(alias="lambda", description="Edge-multiplicity |K:H∩J| = |L:J|")
    connected: bool = Field(description="Whether G = <H, J>")
    K: Group = Field(description="H ∩ H^g, the stabiliser of an arc's two ends")
    L: Group = Field(description="K<g>, the edge stabiliser of the base graph")
    g: Perm = Field(description="The chosen element of J outside H")


class CosetGraph:
    """Cos(G, H, J) together with the coset spaces that label it."""

    def __init__(self, G: Group, H: Group, J: Group, g: Optional[Perm] = None):
        H_cap_J = validate_coset_triple(G, H, J)
        if g is None:
            g = arc_reverser(H, J)
        elif g not in J:
            raise NotASubgroup("The forced arc reverser is not an element of J", location="g")
        elif g in H:
            raise GInH("The forced arc reverser lies in H", location="g")

        self.G, self.H, self.J, self.g = G, H, J, g
        self.H_cap_J = H_cap_J
        self.vertex_space: CosetSpace = coset_space(G, H)
        self.edge_space: CosetSpace = coset_space(G, J)

        # Jy is incident with exactly Hy and Hgy
        edges = [
            (y, (self.vertex_space.canonical(y), self.vertex_space.canonical(g * y)))
            for y in self.edge_space.reps
        ]
        self.graph = MultiGraph(self.vertex_space.reps, edges)

        K = intersect(H, conjugate(H, g))
        L = generated([*K.generators, g], G.degree, G.cap)
        self.params = GraphParams(
            k=H.order // K.order,
            lam=K.order // H_cap_J.order,
            connected=join(H, J).order == G.order,
            K=K,
            L=L,
            g=g,
        )
        logger.debug(
            f"Cos(G,H,J): |G|={G.order}, {len(self.graph.vertices)} vertices, {len(self.graph.edges)} edges, "
            f"k={self.params.k}, lambda={self.params.lam}"
        )

    def vertex_of(self, element: Perm) -> Perm:
        return self.vertex_space.canonical(element)

    def edge_of(self, element: Perm) -> Perm:
        return self.edge_space.canonical(element)


def validate_coset_triple(G: Group, H: Group, J: Group) -> Group:
    """Check the preconditions of Cos(G, H, J) and return H ∩ J."""
    if G.degree != H.degree or G.degree != J.degree:
        raise DegreeMismatch("G, H and J must share one degree")
    if not H.is_subgroup_of(G):
        raise NotASubgroup("H is not a subgroup of G", location="H")
    if not J.is_subgroup_of(G):
        raise NotASubgroup("J is not a subgroup of G", location="J")
    if H.order == G.order:
        raise HEqualsG("H must be a proper subgroup of G", location="H")

    H_cap_J = intersect(H, J)
    if J.order != 2 * H_cap_J.order:
        raise BadIndex(f"|J : H∩J| must be 2, got {J.order / H_cap_J.order:g}", location="J")
    return H_cap_J


def arc_reverser(H: Group, J: Group) -> Perm:
    """The least element of J outside H."""
    return min(j for j in J.elements if j not in H)


def build_coset_graph(G: Group, H: Group, J: Group, g: Optional[Perm] = None) -> tuple[MultiGraph, GraphParams]:
    construction = CosetGraph(G, H, J, g)
    return construction.graph, construction.params


def base_graph(G: Group, H: Group, J: Group) -> MultiGraph:
    """Cos(G, H, L) with L = K<g>: the simple graph whose lambda-extender is Cos(G, H, J)."""
    params = CosetGraph(G, H, J).params
    graph, base_params = build_coset_graph(G, H, params.L, g=params.g)
    if base_params.lam != 1:
        raise CrossCheckFailed(f"Base graph has edge-multiplicity {base_params.lam}", location="base_graph")
    return graph


def simp_cos(G: Group, H: Group, g: Perm) -> MultiGraph:
    """SimpCos(G, H, HgH): Hx ~ Hy iff yx^-1 lies in the double coset HgH."""
    if g in H:
        raise GInH("g must lie outside H", location="g")

    double_coset = {h * g * k for h in H.elements for k in H.elements}
    if ~g not in double_coset:
        raise InvalidGraph("HgH is not closed under inversion, so adjacency is not symmetric", location="g")

    space = coset_space(G, H)
    steps = sorted({space.canonical(d) for d in double_coset})
    edges = []
    for x in space.reps:
        for step in steps:
            y = space.canonical(step * x)
            if x < y:
                edges.append(((x, y), (x, y)))
    return MultiGraph(space.reps, sorted(edges, key=lambda item: item[0]))


def mu_extenders(G: Group, H: Group, J: Group) -> list[tuple[Group, int]]:
    """
    Subgroups J' of J that reach outside H. Each contains an element of
    J \\ (H ∩ J), and Cos(G, H, J') is a (G, mu)-extender of Cos(G, H, J)
    with mu = |J : J'|.
    """
    validate_coset_triple(G, H, J)
    found = [
        (candidate, J.order // candidate.order)
        for candidate in subgroups(J)
        if any(element not in H for element in candidate.elements)
    ]
    found.sort(key=lambda item: (item[1], sorted(item[0].elements)))
    logger.info(f"Found {len(found)} extender subgroups inside J of order {J.order}")
    return found


def kernel_extenders(G: Group, H: Group, J: Group) -> list[tuple[Group, int]]:
    """
    Extenders of the base graph built from proper subgroups R of K:
    J' = R<g^b> for odd b with g^(2b) in R and R normalised by g^b, giving
    multiplicity mu = |K : R| over the base graph.
    """
    params = CosetGraph(G, H, J).params
    K, g = params.K, params.g
    found: dict = {}
    for R in subgroups(K):
        if R.order == K.order:
            continue
        for b in range(1, element_order(g), 2):
            power = g**b
            if power * power not in R or conjugate(R, power) != R:
                continue
            candidate = generated([*R.generators, power], G.degree, G.cap)
            found.setdefault(candidate.element_set, (candidate, K.order // R.order))
    result = sorted(found.values(), key=lambda item: (item[1], sorted(item[0].elements)))
    logger.info(f"Found {len(result)} extenders from proper subgroups of K (|K|={K.order})")
    return result


def induced_action(G: Group, H: Group, J: Group) -> tuple[Group, MultiGraph]:
    """
    The permutation group G induces on V ∪ E, on points 0..|V|-1 for the
    vertices followed by the edges, and the graph on those same points.
    """
    construction = CosetGraph(G, H, J)
    vertices, edges = construction.vertex_space, construction.edge_space
    offset = len(vertices)

    images = [
        Perm(
            tuple(vertices.act_index(i, s) for i in range(offset))
            + tuple(offset + edges.act_index(j, s) for j in range(len(edges)))
        )
        for s in G.generators
    ]
    induced = Group(offset + len(edges), images, G.cap)
    graph = MultiGraph(
        range(offset),
        [
            (offset + position, tuple(vertices.position(end) for end in construction.graph.ends(edge)))
            for position, edge in enumerate(construction.graph.edges)
        ],
    )
    return induced, graph


def quotient_core(G: Group, H: Group, J: Group) -> tuple[Group, MultiGraph]:
    """
    Factor out M = Core_G(H ∩ J): the group induced on V ∪ E is G/M acting
    faithfully, and the coset graph it defines is isomorphic to Cos(G, H, J).
    """
    M = core(G, validate_coset_triple(G, H, J))
    induced, point_graph = induced_action(G, H, J)
    if induced.order * M.order != G.order:
        raise CrossCheckFailed(
            f"Induced group has order {induced.order}, expected {G.order // M.order}",
            location="quotient_core",
        )
    logger.info(f"Core of H∩J has order {M.order}; quotient acts faithfully with order {induced.order}")

    vertex_point = 0
    edge_point = len(point_graph.vertices)
    graph, _ = build_coset_graph(induced, induced.stabilizer(vertex_point), induced.stabilizer(edge_point))
    return induced, graph


def edge_kernel(G: Group, H: Group, J: Group) -> Group:
    """Elements fixing every edge, checked against Core_G(J)."""
    construction = CosetGraph(G, H, J)
    space = construction.edge_space
    kernel = Group.from_elements(
        G.degree,
        (g for g in J.elements if all(space.act(rep, g) == rep for rep in space.reps)),
        G.cap,
    )
    if kernel != core(G, J):
        raise CrossCheckFailed("Edge kernel differs from Core_G(J)", location="edge_kernel")
    return kernel


def _point_domain(graph: MultiGraph) -> tuple[dict, dict]:
    vertex_points = {vertex: i for i, vertex in enumerate(graph.vertices)}
    offset = len(vertex_points)
    edge_points = {edge: offset + j for j, edge in enumerate(graph.edges)}
    return vertex_points, edge_points


def is_arc_transitive(group: Group, graph: MultiGraph) -> bool:
    """
    Whether `group`, acting on the points of V ∪ E (vertices first, then
    edges, in graph order), preserves incidence and is transitive on arcs.
    """
    vertex_points, edge_points = _point_domain(graph)
    if group.degree != len(vertex_points) + len(edge_points):
        raise DegreeMismatch(
            f"Group degree {group.degree} does not match |V|+|E|={len(vertex_points) + len(edge_points)}"
        )

    incidence = {edge_points[e]: frozenset(vertex_points[end] for end in graph.ends(e)) for e in graph.edges}
    for generator in group.generators:
        for edge_point, ends in incidence.items():
            image = generator(edge_point)
            if image not in incidence or incidence[image] != frozenset(generator(end) for end in ends):
                return False

    arcs = {(end, edge_point) for edge_point, ends in incidence.items() for end in ends}
    if not arcs:
        return True
    start = min(arcs)
    orbit = {start}
    queue = [start]
    for vertex, edge in queue:
        for generator in group.generators:
            image = (generator(vertex), generator(edge))
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    return len(orbit) == len(arcs)


def recover_coset_rep(G: Group, graph: MultiGraph, arc: tuple) -> tuple[Group, Group]:
    """
    Read off H = G_alpha and J = G_e for an arc (alpha, e) of a graph on
    which G acts arc-transitively; Cos(G, H, J) is then isomorphic to the graph.
    """
    alpha, edge = arc
    if alpha not in graph.ends(edge):
        raise InvalidGraph(f"Vertex {alpha!r} is not incident with edge {edge!r}", location="arc")
    if not is_arc_transitive(G, graph):
        raise NotArcTransitive("The group is not arc-transitive on the graph", location="recover_coset_rep")

    vertex_points, edge_points = _point_domain(graph)
    return G.stabilizer(vertex_points[alpha]), G.stabilizer(edge_points[edge])


def enumerate_legal_triples(G: Group, limit: Optional[int] = None) -> list[tuple[Group, Group]]:
    """Pairs (H, J) of subgroups of G with H proper and |J : H∩J| = 2."""
    lattice = subgroups(G)
    found = []
    for H in lattice:
        if H.order == G.order:
            continue
        for J in lattice:
            if J.order % 2 or J.order // 2 > H.order:
                continue
            if intersect(H, J).order * 2 != J.order:
                continue
            found.append((H, J))
            if limit is not None and len(found) >= limit:
                return found
    return found
