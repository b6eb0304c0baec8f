from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from loguru import logger
from sympy.combinatorics import Permutation, PermutationGroup

from src.config import CFG
from src.errors import CapExceeded, DegreeMismatch, NotASubgroup, SubgroupLimitExceeded
from src.permutation_groups.perm import Perm


def closure(generators: Sequence[Perm], degree: Optional[int] = None, cap: Optional[int] = None) -> tuple[Perm, ...]:
    """
    Enumerate the group generated by `generators`.

    Elements come out breadth-first by word length, generators taken in the
    order given, so the enumeration is deterministic.

    Args:
        generators: Permutations of a common degree.
        degree: Needed only when `generators` is empty.
        cap: Largest admissible group order.

    Returns:
        Tuple of all elements, identity first.
    """
    cap = CFG.default_cap if cap is None else cap
    degree = _common_degree(generators, degree)

    identity = Perm.identity(degree)
    elements = [identity]
    seen = {identity}
    position = 0
    while position < len(elements):
        current = elements[position]
        position += 1
        for generator in generators:
            product = current * generator
            if product in seen:
                continue
            seen.add(product)
            elements.append(product)
            if len(elements) > cap:
                raise CapExceeded(f"Group order exceeds the cap of {cap} elements", location="closure")

    return tuple(elements)


def _common_degree(perms: Iterable[Perm], degree: Optional[int]) -> int:
    degrees = {perm.degree for perm in perms}
    if degree is not None:
        degrees.add(degree)
    if len(degrees) > 1:
        raise DegreeMismatch(f"Permutations of different degrees: {sorted(degrees)}")
    if not degrees:
        raise DegreeMismatch("Degree is required for an empty generating set")
    return degrees.pop()


class Group:
    """
    A permutation group given by generators, with its element set
    materialized on first use.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Perm] = (),
        cap: Optional[int] = None,
        elements: Optional[Sequence[Perm]] = None,
    ):
        self.degree = _common_degree(generators, degree)
        self.cap = CFG.default_cap if cap is None else cap
        self._generators = tuple(generators) if generators or elements is None else None
        if elements is not None:
            self.__dict__["elements"] = tuple(elements)

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Perm], cap: Optional[int] = None) -> "Group":
        """Wrap an element set already known to be closed."""
        ordered = sorted(set(elements))
        identity = Perm.identity(degree)
        if identity not in ordered:
            raise NotASubgroup("Element set does not contain the identity", location="from_elements")
        ordered.remove(identity)
        return cls(degree, cap=cap, elements=[identity, *ordered])

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        elements = closure(self.generators, self.degree, self.cap)
        logger.debug(f"Materialized group of order {len(elements)} on {self.degree} points")
        return elements

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def generators(self) -> tuple[Perm, ...]:
        if self._generators is None:
            self._generators = self._reduced_generators()
        return self._generators

    def _reduced_generators(self) -> tuple[Perm, ...]:
        chosen = []
        reached = {Perm.identity(self.degree)}
        for element in sorted(self.elements):
            if element in reached:
                continue
            chosen.append(element)
            reached = set(closure(chosen, self.degree, self.cap))
            if len(reached) == self.order:
                break
        return tuple(chosen)

    @property
    def order(self) -> int:
        return len(self.elements)

    def to_sympy(self) -> PermutationGroup:
        if not self.generators:
            return PermutationGroup([Permutation(list(range(self.degree)), size=self.degree)])
        return PermutationGroup([generator.to_sympy() for generator in self.generators])

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, element: Perm) -> bool:
        return element in self.element_set

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Group) and self.degree == other.degree and self.element_set == other.element_set

    def __hash__(self) -> int:
        return hash(self.element_set)

    def __repr__(self) -> str:
        return f"Group(order={self.order}, degree={self.degree}, generators={len(self.generators)})"

    def is_subgroup_of(self, other: "Group") -> bool:
        return self.degree == other.degree and all(generator in other for generator in self.generators)

    def is_normal_in(self, ambient: "Group") -> bool:
        return all(
            element.conj(generator) in self
            for generator in ambient.generators
            for element in self.generators
        )

    def is_abelian(self) -> bool:
        return all(p.commutes_with(q) for p in self.generators for q in self.generators)

    def center(self) -> "Group":
        central = [
            element for element in self.elements
            if all(element.commutes_with(generator) for generator in self.generators)
        ]
        return Group.from_elements(self.degree, central, self.cap)

    def orbit(self, point: int) -> list[int]:
        found = [point]
        seen = {point}
        for current in found:
            for generator in self.generators:
                image = generator(current)
                if image not in seen:
                    seen.add(image)
                    found.append(image)
        return found

    def stabilizer(self, point: int) -> "Group":
        return Group.from_elements(self.degree, (g for g in self.elements if g(point) == point), self.cap)


def cyclic(p: Perm) -> Group:
    powers = [Perm.identity(p.degree)]
    current = p
    while not current.is_identity():
        powers.append(current)
        current = current * p
    return Group(p.degree, [p], elements=powers)


def conjugate(H: Group, g: Perm) -> Group:
    """Return ``H^g = {g^-1 h g : h in H}``."""
    inverse = ~g
    elements = [inverse * h * g for h in H.elements]
    group = Group(H.degree, [inverse * h * g for h in H.generators], H.cap, elements=elements)
    return group


def generated(elements: Sequence[Perm], degree: Optional[int] = None, cap: Optional[int] = None) -> Group:
    degree = _common_degree(elements, degree)
    return Group(degree, list(elements), cap)


def intersect(A: Group, B: Group) -> Group:
    if A.degree != B.degree:
        raise DegreeMismatch(f"Cannot intersect groups of degree {A.degree} and {B.degree}")
    smaller, larger = (A, B) if A.order <= B.order else (B, A)
    return Group.from_elements(A.degree, (g for g in smaller.elements if g in larger), A.cap)


def join(A: Group, B: Group) -> Group:
    return generated([*A.generators, *B.generators], A.degree, A.cap)


def subgroups(G: Group, limit: Optional[int] = None) -> list[Group]:
    """
    All subgroups of a small group, found by closing every subgroup under one
    more cyclic generator until nothing new appears.

    Elements are handled by their index in ``G.elements`` with products
    memoized, so each closure is a walk over integers.

    Returns:
        Subgroups ordered by order, then by sorted element images.
    """
    limit = CFG.subgroup_enumeration_limit if limit is None else limit
    if G.order > limit:
        raise SubgroupLimitExceeded(
            f"Subgroup enumeration supports groups of order at most {limit}, got {G.order}",
            location="subgroups",
        )

    elements = G.elements
    index = {element: position for position, element in enumerate(elements)}
    products: dict = {}

    def multiply(i: int, j: int) -> int:
        if (i, j) not in products:
            products[i, j] = index[elements[i] * elements[j]]
        return products[i, j]

    def close(generators: tuple[int, ...]) -> tuple[int, ...]:
        found = [0]
        seen = {0}
        for current in found:
            for generator in generators:
                product = multiply(current, generator)
                if product not in seen:
                    seen.add(product)
                    found.append(product)
        return tuple(found)

    cyclic_reps = {}
    for position in range(1, len(elements)):
        cyclic_reps.setdefault(frozenset(close((position,))), position)

    found = {frozenset((0,)): ((), (0,))}
    frontier = [frozenset((0,))]
    while frontier:
        next_frontier = []
        for key in frontier:
            generators, _ = found[key]
            for rep in cyclic_reps.values():
                if rep in key:
                    continue
                extended = generators + (rep,)
                members = close(extended)
                candidate = frozenset(members)
                if candidate in found:
                    continue
                found[candidate] = (extended, members)
                next_frontier.append(candidate)
        frontier = next_frontier

    lattice = [
        Group(G.degree, [elements[i] for i in generators], G.cap, elements=[elements[i] for i in members])
        for generators, members in found.values()
    ]
    logger.debug(f"Enumerated {len(lattice)} subgroups of a group of order {G.order}")
    return sorted(lattice, key=lambda group: (group.order, sorted(group.elements)))
