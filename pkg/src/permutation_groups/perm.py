from typing import Iterable, Sequence

from sympy.combinatorics import Permutation

from src.errors import DegreeMismatch, InvalidPermutation


class Perm:
    """
    A permutation of {0, ..., degree - 1} backed by a sympy ``Permutation``.

    Products act on the right: ``(p * q)(i) == q(p(i))``, so ``p * q`` means
    "apply p, then q". Conjugation follows the same convention,
    ``p.conj(g) == ~g * p * g``. The image tuple is kept alongside the sympy
    object for hashing, ordering and point evaluation.
    """

    __slots__ = ("_perm", "images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"Image array is not a bijection: {list(images)}")
        self._set(Permutation(list(images), size=len(images)))

    def _set(self, perm: Permutation) -> None:
        self._perm = perm
        self.images = tuple(perm.array_form)
        self._hash = hash(self.images)

    @classmethod
    def _wrap(cls, perm: Permutation) -> "Perm":
        wrapped = cls.__new__(cls)
        wrapped._set(perm)
        return wrapped

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._wrap(Permutation(list(range(degree)), size=degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        cycles = [tuple(cycle) for cycle in cycles]
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree or point in seen:
                    raise InvalidPermutation(f"Bad cycle {cycle} on degree {degree}")
                seen.add(point)
        return cls._wrap(Permutation([list(cycle) for cycle in cycles if cycle], size=degree))

    @classmethod
    def from_sympy(cls, perm: Permutation) -> "Perm":
        return cls._wrap(perm)

    def to_sympy(self) -> Permutation:
        return self._perm

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        if other.degree != self.degree:
            raise DegreeMismatch(f"Cannot compose degree {self.degree} with degree {other.degree}")
        return Perm._wrap(self._perm * other._perm)

    def __invert__(self) -> "Perm":
        return Perm._wrap(~self._perm)

    def inverse(self) -> "Perm":
        return ~self

    def __pow__(self, exponent: int) -> "Perm":
        return Perm._wrap(self._perm**exponent)

    def conj(self, g: "Perm") -> "Perm":
        """Return ``g^-1 * self * g``."""
        if g.degree != self.degree:
            raise DegreeMismatch(f"Cannot conjugate degree {self.degree} by degree {g.degree}")
        return Perm._wrap(self._perm ^ g._perm)

    def commutes_with(self, other: "Perm") -> bool:
        return self * other == other * self

    def is_identity(self) -> bool:
        return self._perm.is_Identity

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point."""
        return sorted(tuple(cycle) for cycle in self._perm.cyclic_form)

    def order(self) -> int:
        return element_order(self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __le__(self, other: "Perm") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = "".join("(" + " ".join(map(str, cycle)) + ")" for cycle in self.cycles())
        return f"Perm({body or '()'}, degree={self.degree})"

    def to_list(self) -> list[int]:
        return list(self.images)


def element_order(p: Perm) -> int:
    """Least n >= 1 with p^n = identity."""
    return int(p.to_sympy().order())
