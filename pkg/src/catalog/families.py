from math import gcd, lcm
from typing import Literal, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field
from sympy.combinatorics import PermutationGroup
from sympy.combinatorics.named_groups import AlternatingGroup, CyclicGroup, DihedralGroup, SymmetricGroup

from src.config import CFG
from src.errors import BadParams, CrossCheckFailed, IllDefined
from src.permutation_groups.group import Group, generated
from src.permutation_groups.perm import Perm, element_order


class CatalogEntry(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str = Field(description="Family name")
    group: Group = Field(description="The ambient group")
    elements: dict[str, Perm] = Field(description="Named elements")
    subgroups: dict[str, Group] = Field(default_factory=dict, description="Named subgroups")
    params: dict[str, int] = Field(default_factory=dict, description="Family parameters")
    expected: dict[str, int] = Field(default_factory=dict, description="Closed-form invariants, checked at build time")


def _check(condition: bool, message: str, location: str) -> None:
    if not condition:
        raise CrossCheckFailed(message, location=location)


def _lift(named: PermutationGroup, offset: int = 0, degree: Optional[int] = None) -> Group:
    """Move a sympy named group onto the points offset..offset+n-1 of `degree` points."""
    degree = offset + named.degree if degree is None else degree
    tail = list(range(offset + named.degree, degree))
    generators = [
        Perm(list(range(offset)) + [offset + i for i in g.array_form] + tail)
        for g in named.generators
        if not g.is_Identity
    ]
    return Group(degree, generators)


def symmetric_group(n: int, offset: int = 0, degree: Optional[int] = None) -> Group:
    """Sym on the points offset..offset+n-1 of a set of `degree` points."""
    degree = offset + n if degree is None else degree
    if n < 2:
        return Group(degree, [])
    return _lift(SymmetricGroup(n), offset, degree)


def alternating_group(n: int) -> Group:
    if n < 3:
        return Group(n, [])
    return _lift(AlternatingGroup(n))


def cyclic_group(n: int) -> Group:
    if n < 2:
        return Group(n, [])
    return _lift(CyclicGroup(n))


def dihedral_group(n: int) -> Group:
    """Dihedral group of order 2n acting on the n-gon."""
    if n < 3:
        raise BadParams(f"dihedral group needs n >= 3, got {n}", location="n")
    return _lift(DihedralGroup(n))


def direct_product(first: Group, second: Group) -> Group:
    """Product acting on the disjoint union of the two point sets."""
    degree = first.degree + second.degree
    shift = first.degree
    generators = [Perm(list(g.images) + list(range(shift, degree))) for g in first.generators]
    generators += [Perm(list(range(shift)) + [shift + i for i in g.images]) for g in second.generators]
    return Group(degree, generators)


PETERSEN_H = [[(0, 3, 4)], [(1, 2), (3, 4)]]
PETERSEN_G = [(1, 3), (2, 4)]
PETERSEN_B = [(1, 2), (3, 4)]


def petersen(variant: Literal["A5", "S5"] = "A5") -> CatalogEntry:
    """
    The Petersen graph as Cos(A5, D6, D4) or Cos(S5, D12, D8), with its
    2-extender (A5) and 4-extender (S5) arc reversers.
    """
    if variant not in ("A5", "S5"):
        raise BadParams(f"Unknown Petersen variant {variant!r}", location="variant")
    degree = 5
    g = Perm.from_cycles(degree, PETERSEN_G)
    b = Perm.from_cycles(degree, PETERSEN_B)
    h_generators = [Perm.from_cycles(degree, cycles) for cycles in PETERSEN_H]
    l_generators = [b, g]
    if variant == "A5":
        G = Group(degree, [Perm.from_cycles(degree, [(0, 1, 2)]), Perm.from_cycles(degree, [(0, 1, 2, 3, 4)])])
    else:
        G = Group(degree, [Perm.from_cycles(degree, [(0, 1)]), Perm.from_cycles(degree, [(0, 1, 2, 3, 4)])])
        swap = Perm.from_cycles(degree, [(3, 4)])
        h_generators.append(swap)
        l_generators.append(swap)

    H = generated(h_generators)
    L = generated(l_generators)
    scale = 1 if variant == "A5" else 2
    expected = {"order": 60 * scale, "H": 6 * scale, "L": 4 * scale}
    _check(G.order == expected["order"], f"|G| = {G.order}", "petersen")
    _check(H.order == expected["H"] and L.order == expected["L"], "Subgroup orders differ", "petersen")

    elements = {"g": g, "b": b, "g2": Perm.from_cycles(degree, [(1, 4), (2, 3)])}
    elements.update({f"h{i}": h for i, h in enumerate(h_generators)})
    return CatalogEntry(
        name=f"petersen-{variant}",
        group=G,
        elements=elements,
        subgroups={"H": H, "L": L, "J": generated([g])},
        expected=expected,
    )


def hypercube(n: int, lam: int) -> CatalogEntry:
    """
    A = Z_2^n : D_{2n lambda} on 2n + n*lambda points: the pairs (eps, i)
    at positions eps*n + i, then Z_{n lambda}.
    """
    if n < 3 or lam < 1:
        raise BadParams(f"Hypercube needs n >= 3 and lambda >= 1, got n={n}, lambda={lam}", location="hypercube")
    cycle_length = n * lam
    offset = 2 * n
    degree = offset + cycle_length

    def flip(j: int) -> Perm:
        return Perm.from_cycles(degree, [(j, n + j)])

    a = Perm(
        [(i + 1) % n for i in range(n)]
        + [n + (i + 1) % n for i in range(n)]
        + [offset + (j + 1) % cycle_length for j in range(cycle_length)]
    )
    x = Perm(
        [(-i) % n for i in range(n)]
        + [n + (-i) % n for i in range(n)]
        + [offset + (-j) % cycle_length for j in range(cycle_length)]
    )
    v = [flip(j) for j in range(n)]
    z = v[0]

    for i in range(n):
        _check(v[i].conj(a) == v[(i + 1) % n], f"v_{i}^a != v_{i + 1}", "hypercube")
        _check(v[i].conj(x) == v[(-i) % n], f"v_{i}^x != v_{n - i}", "hypercube")
    _check(a.conj(x) == ~a, "a^x != a^-1", "hypercube")

    A = generated([a, x, z])
    X = generated([a, z])
    Y = generated([a, z * x])
    expected = {"order": 2 ** (n + 1) * n * lam, "X": 2**n * n * lam, "Y": 2**n * n * lam}
    _check(A.order == expected["order"], f"|A| = {A.order}, expected {expected['order']}", "hypercube")
    _check(X.order == expected["X"] and Y.order == expected["Y"], "X and Y must have index 2", "hypercube")

    y = a * x
    elements = {"a": a, "x": x, "z": z, "y": y, "zx": z * x}
    elements.update({f"v{j}": v[j] for j in range(n)})
    logger.debug(f"Hypercube group for n={n}, lambda={lam} has order {A.order}")
    return CatalogEntry(
        name="hypercube",
        group=A,
        elements=elements,
        subgroups={
            "A": A,
            "X": X,
            "Y": Y,
            "H": generated([x, y]),
            "J": generated([x, z]),
            "W": generated([y, z]),
        },
        params={"n": n, "lambda": lam},
        expected=expected,
    )


def knn_shift(lam: int) -> tuple[int, int, int]:
    """(mu, delta, mu + delta) for the K_{n,n} family."""
    mu = lam // 2
    delta = 1 if mu % 2 == 0 else 2
    return mu, delta, mu + delta


def knn(n: int, lam: int) -> CatalogEntry:
    """
    G = (<b> x <c1> x <c2>) : <z> on lambda + 2n points with b^z = b^(mu+delta),
    c1^z = c1, c2^z = c2^-1 and a = b c1 c2, so that Cos(G, <a>, <z>) is K_{n,n}^(lambda).
    """
    if n < 3 or n % 2 == 0 or lam <= 2 or lam % 2 or gcd(lam, n) != 1:
        raise BadParams(
            f"K_(n,n) family needs odd n >= 3, even lambda > 2 and gcd(lambda, n) = 1, got n={n}, lambda={lam}",
            location="knn",
        )
    mu, delta, shift = knn_shift(lam)
    if (shift * shift) % lam != 1 or gcd(shift, lam) != 1:
        raise IllDefined(
            f"(mu+delta)^2 = {shift * shift} is not 1 mod {lam}; z would not be an involution",
            location="knn",
        )

    first, second = lam, lam + n
    degree = lam + 2 * n

    def on_parts(zl, c1, c2) -> Perm:
        return Perm([zl(i) for i in range(lam)] + [first + c1(i) for i in range(n)] + [second + c2(i) for i in range(n)])

    b = on_parts(lambda i: (i + 1) % lam, lambda i: i, lambda i: i)
    c1 = on_parts(lambda i: i, lambda i: (i + 1) % n, lambda i: i)
    c2 = on_parts(lambda i: i, lambda i: i, lambda i: (i + 1) % n)
    z = on_parts(lambda i: (shift * i) % lam, lambda i: i, lambda i: (-i) % n)
    a = b * c1 * c2

    _check(element_order(z) == 2, "z is not an involution", "knn")
    _check(b.conj(z) == b**shift, "b^z != b^(mu+delta)", "knn")
    _check(c1.conj(z) == c1 and c2.conj(z) == ~c2, "z does not act as (c1, c2) -> (c1, c2^-1)", "knn")

    G = generated([a, z])
    expected = {"order": 2 * lam * n * n, "a": lam * n}
    _check(G.order == expected["order"], f"|G| = {G.order}, expected {expected['order']}", "knn")
    _check(element_order(a) == expected["a"], "|a| != lambda*n", "knn")
    _check(G.degree == degree, "degree mismatch", "knn")

    return CatalogEntry(
        name="knn",
        group=G,
        elements={"a": a, "z": z, "b": b, "c1": c1, "c2": c2},
        params={"n": n, "lambda": lam, "mu": mu, "delta": delta},
        expected=expected,
    )


class TableComparison(BaseModel):
    n: int
    lam: int = Field(alias="lambda")
    mu: int
    delta: int
    row: Optional[str] = Field(description="Matching reference row, if any")
    table_lambda_p: Optional[int]
    formula_lambda_p: int = Field(description="|b^(mu+delta+1)|")
    computed_lambda_p: int = Field(description="|<a> ∩ <az>|")
    table_m: Optional[int]
    formula_m: int = Field(description="2 lcm(|b^(mu+delta+1)|, n)")
    computed_m: int = Field(description="|az|")
    circular: bool
    agrees: bool = Field(description="Whether the reference row matches the computed values")

    model_config = ConfigDict(populate_by_name=True)


def knn_table_row(mu: int) -> Optional[tuple[str, int]]:
    for (modulus, residue), row in CFG.KNN_TABLE_ROWS.items():
        if (mu % 2 == 0) == (modulus == 4) and mu % modulus == residue:
            return row["label"], row["lambda_divisor"]
    return None


def knn_table_comparison(n: int, lam: int) -> TableComparison:
    entry = knn(n, lam)
    a, z, b = entry.elements["a"], entry.elements["z"], entry.elements["b"]
    mu, delta = entry.params["mu"], entry.params["delta"]
    az = a * z

    formula_lambda_p = element_order(b ** (mu + delta + 1))
    az_powers = set(_powers(az))
    computed_lambda_p = sum(1 for power in _powers(a) if power in az_powers)
    formula_m = 2 * lcm(formula_lambda_p, n)
    computed_m = element_order(az)

    row = knn_table_row(mu)
    table_lambda_p = lam // row[1] if row else None
    table_m = 2 * n * table_lambda_p if row else None
    agrees = row is not None and table_lambda_p == computed_lambda_p and table_m == computed_m
    if row is not None and not agrees:
        logger.warning(
            f"K_({n},{n}) with lambda={lam}: reference row '{row[0]}' gives lambda'={table_lambda_p}, "
            f"computed {computed_lambda_p}"
        )
    return TableComparison(
        n=n,
        lam=lam,
        mu=mu,
        delta=delta,
        row=row[0] if row else None,
        table_lambda_p=table_lambda_p,
        formula_lambda_p=formula_lambda_p,
        computed_lambda_p=computed_lambda_p,
        table_m=table_m,
        formula_m=formula_m,
        computed_m=computed_m,
        circular=computed_lambda_p == 1,
        agrees=agrees,
    )


def _powers(p: Perm) -> list[Perm]:
    return [p**k for k in range(element_order(p))]


def core_example(lam: int) -> CatalogEntry:
    """
    G = S3 x Z_lambda on 3 + lambda points, H = Y1 x Z, J = Y3 x 1, where
    Y1 fixes point 0 and Y3 fixes point 2 of {0, 1, 2}.
    Cos(G, H, J) is C_3^(lambda) while the base edge stabiliser L has core Z.
    """
    if lam < 2:
        raise BadParams(f"core example needs lambda >= 2, got {lam}", location="core_example")
    degree = 3 + lam
    swap_01 = Perm.from_cycles(degree, [(0, 1)])
    swap_12 = Perm.from_cycles(degree, [(1, 2)])
    rotation = Perm.from_cycles(degree, [(0, 1, 2)])
    c = Perm.from_cycles(degree, [tuple(range(3, degree))])

    G = generated([swap_01, rotation, c])
    H = generated([swap_12, c])
    J = generated([swap_01])
    expected = {"order": 6 * lam, "Z": lam}
    _check(G.order == expected["order"], f"|G| = {G.order}", "core_example")
    return CatalogEntry(
        name="core-example",
        group=G,
        elements={"y01": swap_01, "y12": swap_12, "r": rotation, "c": c},
        subgroups={"H": H, "J": J, "Z": generated([c]), "JZ": generated([swap_01, c])},
        params={"lambda": lam},
        expected=expected,
    )


def dihedral_extender(n: int, lam: int) -> CatalogEntry:
    """
    G = D_2n x Sym(lambda), H = <s> x Sym(lambda), J = <g> x Sym(lambda - 1):
    Cos(G, H, J) is C_n^(lambda) with vertex kernel Sym(lambda).
    """
    if n < 3 or lam < 1:
        raise BadParams(f"dihedral extender needs n >= 3 and lambda >= 1, got n={n}, lambda={lam}")
    degree = n + lam
    rotation = Perm([(i + 1) % n for i in range(n)] + list(range(n, degree)))
    s = Perm([(-i) % n for i in range(n)] + list(range(n, degree)))
    g = Perm([(1 - i) % n for i in range(n)] + list(range(n, degree)))
    sym_all = symmetric_group(lam, offset=n, degree=degree)
    sym_rest = symmetric_group(lam - 1, offset=n, degree=degree)

    G = generated([rotation, s, *sym_all.generators], degree)
    H = generated([s, *sym_all.generators], degree)
    J = generated([g, *sym_rest.generators], degree)
    expected = {"order": 2 * n * sym_all.order, "kernel": sym_all.order}
    _check(G.order == expected["order"], f"|G| = {G.order}", "dihedral_extender")
    return CatalogEntry(
        name="dihedral-extender",
        group=G,
        elements={"r": rotation, "s": s, "g": g},
        subgroups={"H": H, "J": J, "Sym": sym_all},
        params={"n": n, "lambda": lam},
        expected=expected,
    )


def abelian_pair(r: int) -> CatalogEntry:
    """Z_r x Z_2 with a = (0 ... r-1) and z = (r r+1); the graph is K_2^(r)."""
    if r < 2:
        raise BadParams(f"abelian pair needs r >= 2, got {r}")
    degree = r + 2
    a = Perm.from_cycles(degree, [tuple(range(r))])
    z = Perm.from_cycles(degree, [(r, r + 1)])
    return CatalogEntry(
        name="abelian-pair",
        group=generated([a, z]),
        elements={"a": a, "z": z},
        params={"r": r},
        expected={"order": 2 * r},
    )


def dihedral_pair(r: int) -> CatalogEntry:
    """Two reflections of an r-gon whose product has order r; the graph is C_r."""
    if r < 3:
        raise BadParams(f"dihedral pair needs r >= 3, got {r}")
    a = Perm([(-i) % r for i in range(r)])
    z = Perm([(1 - i) % r for i in range(r)])
    return CatalogEntry(
        name="dihedral-pair",
        group=generated([a, z]),
        elements={"a": a, "z": z},
        params={"r": r},
        expected={"order": 2 * r},
    )
