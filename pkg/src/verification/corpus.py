from functools import lru_cache
from typing import NamedTuple

from loguru import logger

from src.catalog.families import (
    core_example,
    cyclic_group,
    dihedral_extender,
    dihedral_group,
    direct_product,
    hypercube,
    knn,
    petersen,
    symmetric_group,
)
from src.catalog.three_a6 import three_a6
from src.coset_graphs.construction import enumerate_legal_triples
from src.permutation_groups.group import Group, generated
from src.permutation_groups.perm import Perm
from src.rotary.pairs import RotaryPair


class CosetTriple(NamedTuple):
    label: str
    G: Group
    H: Group
    J: Group


class PairCase(NamedTuple):
    label: str
    a: Perm
    z: Perm


LATTICE_SOURCES = (
    ("S4", lambda: symmetric_group(4), 25),
    ("S5", lambda: symmetric_group(5), 12),
    ("D8xZ3", lambda: direct_product(dihedral_group(4), cyclic_group(3)), 15),
    ("D10xZ2", lambda: direct_product(dihedral_group(5), cyclic_group(2)), 10),
)


@lru_cache(maxsize=1)
def coset_triples() -> tuple[CosetTriple, ...]:
    """Legal (G, H, J) triples from small subgroup lattices and the catalog."""
    triples = []
    for name, build, limit in LATTICE_SOURCES:
        G = build()
        legal = enumerate_legal_triples(G, limit)
        if len(legal) == limit:
            logger.info(f"{name} lattice truncated to its first {limit} legal triples")
        for i, (H, J) in enumerate(legal):
            triples.append(CosetTriple(f"{name}.{i:02d}", G, H, J))

    for variant in ("A5", "S5"):
        entry = petersen(variant)
        triples.append(CosetTriple(f"petersen-{variant}.L", entry.group, entry.subgroups["H"], entry.subgroups["L"]))
        triples.append(CosetTriple(f"petersen-{variant}.g", entry.group, entry.subgroups["H"], entry.subgroups["J"]))

    for lam in (2, 3):
        entry = core_example(lam)
        triples.append(CosetTriple(f"core-example-{lam}", entry.group, entry.subgroups["H"], entry.subgroups["J"]))
    for n, lam in ((4, 2), (5, 3)):
        entry = dihedral_extender(n, lam)
        triples.append(CosetTriple(f"dihedral-extender-{n}-{lam}", entry.group, entry.subgroups["H"], entry.subgroups["J"]))

    cube = hypercube(3, 1)
    triples.append(CosetTriple("hypercube-3-1", cube.group, cube.subgroups["H"], cube.subgroups["J"]))
    bipartite = knn(3, 4)
    a, z = bipartite.elements["a"], bipartite.elements["z"]
    triples.append(CosetTriple("knn-3-4", bipartite.group, generated([a]), generated([z])))
    cover = three_a6()
    triples.append(CosetTriple("three-a6", cover.group, cover.subgroups["A"], generated([cover.elements["z"]])))
    return tuple(triples)


@lru_cache(maxsize=1)
def rotary_pairs() -> tuple[PairCase, ...]:
    """Non-degenerate rotary pairs."""
    cases = []
    for n, lam in ((3, 1), (3, 2), (4, 1)):
        entry = hypercube(n, lam)
        cases.append(PairCase(f"hypercube-X-{n}-{lam}", entry.elements["a"], entry.elements["z"]))
    cube = hypercube(3, 1)
    cases.append(PairCase("hypercube-Y-3-1", cube.elements["a"], cube.elements["zx"]))
    for n, lam in ((3, 4), (5, 6)):
        entry = knn(n, lam)
        cases.append(PairCase(f"knn-{n}-{lam}", entry.elements["a"], entry.elements["z"]))
    cases.append(PairCase("S4-octahedron", Perm.from_cycles(4, [(0, 1, 2, 3)]), Perm.from_cycles(4, [(0, 1)])))
    return tuple(cases)


def build_pair(case: PairCase) -> RotaryPair:
    return RotaryPair(case.a, case.z)
