"""
The triple cover 3.A6 as the stabilizer in SL(3,4) of a hyperoval of
PG(2,4), acting on the 18 non-zero vectors over the six hyperoval points,
together with a rotary pair (a, z) whose BiRoMap is circular and differs
from the BiRoMap of (a^11, z).
"""

from functools import lru_cache

from loguru import logger

from src.catalog.families import CatalogEntry
from src.config import CFG
from src.errors import CrossCheckFailed
from src.permutation_groups.group import Group, cyclic, generated
from src.permutation_groups.perm import Perm, element_order

# F_4 = {0, 1, w, w^2} encoded as 0, 1, 2, 3; addition is XOR
F4_LOG = {1: 0, 2: 1, 3: 2}
F4_EXP = (1, 2, 3)
OMEGA = 2

DIMENSION = 3

HYPEROVAL = (
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, 1, 1),
    (1, 2, 3),
    (1, 3, 2),
)
DEGREE = len(HYPEROVAL) * len(F4_EXP)

# Row-vector action v -> vM; each has determinant 1 and permutes the hyperoval
GENERATOR_MATRICES = {
    "swap": [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
    "cycle": [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    "diagonal": [[1, 0, 0], [0, OMEGA, 0], [0, 0, 3]],
    "shear": [[1, 1, 1], [0, 1, 0], [0, 0, 1]],
}

# Images in A6 of b and z, on the hyperoval points 0..5
B_IMAGE = [(0, 3, 1, 4, 2)]
Z_IMAGE = [(2, 3), (4, 5)]
A_IMAGE = [(0, 1, 2, 3, 4)]


def f4_mul(p: int, q: int) -> int:
    if p == 0 or q == 0:
        return 0
    return F4_EXP[(F4_LOG[p] + F4_LOG[q]) % 3]


def _scaled(t: int, vector: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(f4_mul(t, coordinate) for coordinate in vector)


# point 3i + j is the vector w^j * P_i
POINTS = [_scaled(t, vector) for vector in HYPEROVAL for t in F4_EXP]
POINT_INDEX = {vector: index for index, vector in enumerate(POINTS)}


def matrix_perm(matrix: list[list[int]]) -> Perm:
    """The permutation v -> vM of the 18 hyperoval vectors."""
    images = []
    for v in POINTS:
        w = [0] * DIMENSION
        for j in range(DIMENSION):
            for i in range(DIMENSION):
                w[j] ^= f4_mul(v[i], matrix[i][j])
        images.append(POINT_INDEX[tuple(w)])
    return Perm(images)


def scalar(t: int) -> Perm:
    return matrix_perm([[t if i == j else 0 for j in range(DIMENSION)] for i in range(DIMENSION)])


def quotient_image(g: Perm) -> Perm:
    """The permutation g induces on the six projective hyperoval points."""
    return Perm([g(len(F4_EXP) * point) // len(F4_EXP) for point in range(len(HYPEROVAL))])


def _lift(group: Group, image: Perm, order: int) -> Perm:
    """The unique element of `group` of the given order over `image`."""
    found = [g for g in group.elements if quotient_image(g) == image and element_order(g) == order]
    if len(found) != 1:
        raise CrossCheckFailed(f"Expected one lift of order {order} over {image}, found {len(found)}", location="three_a6")
    return found[0]


@lru_cache(maxsize=1)
def three_a6() -> CatalogEntry:
    """
    Build 3.A6 from the hyperoval generators, pick b of order 5 and the
    involution z over fixed images in A6, and set a = b^2 c with c = wI
    central of order 3, so |a| = 15 and a^10 = c.
    """
    stabilizer = Group(DEGREE, [matrix_perm(matrix) for matrix in GENERATOR_MATRICES.values()])
    c = scalar(OMEGA)
    b = _lift(stabilizer, Perm.from_cycles(len(HYPEROVAL), B_IMAGE), 5)
    z = _lift(stabilizer, Perm.from_cycles(len(HYPEROVAL), Z_IMAGE), 2)
    a = b * b * c

    G = generated([a, z])
    entry = CatalogEntry(
        name="three-a6",
        group=G,
        elements={"a": a, "z": z, "b": b, "c": c, "a11": a**11},
        subgroups={"Z": generated([c]), "W": generated([z, z.conj(a)]), "A": cyclic(a)},
        params={"degree": DEGREE},
        expected={
            "order": CFG.three_a6_order,
            "a": 15,
            "vertices": CFG.three_a6_order // 15,
            "edges": CFG.three_a6_order // 2,
            "faces": CFG.three_a6_order // 10,
        },
    )
    if not quotient_check(entry):
        raise CrossCheckFailed("Generated group is not 3.A6 with the expected images", location="three_a6")
    logger.info(f"Built 3.A6 of order {G.order} on {DEGREE} points")
    return entry


def quotient_check(entry: CatalogEntry) -> bool:
    """
    |G| = 1080, the centre is <wI> of order 3, G modulo the centre is an
    even group of order 360 on the hyperoval, and a, z map to the fixed images.
    """
    G, a, z, c = entry.group, entry.elements["a"], entry.elements["z"], entry.elements["c"]
    quotient = Group(len(HYPEROVAL), [quotient_image(g) for g in G.generators])
    return (
        G.order == CFG.three_a6_order
        and G.center() == entry.subgroups["Z"]
        and entry.subgroups["Z"].order == 3
        and c in G
        and quotient.order == CFG.three_a6_order // 3
        and all(generator.to_sympy().is_even for generator in quotient.generators)
        and quotient_image(a) == Perm.from_cycles(len(HYPEROVAL), A_IMAGE)
        and quotient_image(z) == Perm.from_cycles(len(HYPEROVAL), Z_IMAGE)
    )
