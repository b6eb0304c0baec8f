from collections import Counter
from typing import NamedTuple, Optional

from loguru import logger
from networkx.algorithms.isomorphism import GraphMatcher

from src.config import CFG
from src.coset_graphs.multigraph import MultiGraph
from src.errors import SearchCapExceeded


class IsomorphismWitness(NamedTuple):
    vertex_map: dict
    edge_map: dict


def _same_multiplicity(first: dict, second: dict) -> bool:
    return first["multiplicity"] == second["multiplicity"]


class _BoundedMatcher(GraphMatcher):
    """VF2 over the underlying simple graphs, matching edge multiplicities, with a cap on candidate pairs."""

    def __init__(self, first: MultiGraph, second: MultiGraph, budget: int):
        super().__init__(first.simple_graph, second.simple_graph, edge_match=_same_multiplicity)
        self.budget = budget
        self.steps = 0

    def syntactic_feasibility(self, G1_node, G2_node) -> bool:
        self.steps += 1
        if self.steps > self.budget:
            raise SearchCapExceeded(f"Isomorphism search exceeded {self.budget} steps", location="graph_isomorphic")
        return super().syntactic_feasibility(G1_node, G2_node)


def graph_isomorphic(
    first: MultiGraph, second: MultiGraph, budget: Optional[int] = None
) -> tuple[bool, Optional[IsomorphismWitness]]:
    """
    Decide whether two multigraphs are isomorphic.

    Returns:
        (True, witness) with vertex and edge bijections, or (False, None).
    """
    budget = CFG.isomorphism_budget if budget is None else budget
    if len(first.vertices) != len(second.vertices) or len(first.edges) != len(second.edges):
        return False, None
    signatures_first = Counter(first.degree_signature(v) for v in first.vertices)
    signatures_second = Counter(second.degree_signature(w) for w in second.vertices)
    if signatures_first != signatures_second:
        return False, None

    matcher = _BoundedMatcher(first, second, budget)
    vertex_map = next(matcher.isomorphisms_iter(), None)
    logger.debug(f"Isomorphism search tried {matcher.steps} candidate pairs")
    if vertex_map is None:
        return False, None

    edge_map = {}
    for u, v in first.simple_graph.edges():
        edge_map.update(zip(first.edges_between(u, v), second.edges_between(vertex_map[u], vertex_map[v])))
    return True, IsomorphismWitness(vertex_map, edge_map)
