from typing import Callable

from loguru import logger

from src.errors import NotASubgroup
from src.permutation_groups.group import Group
from src.permutation_groups.perm import Perm


class CosetSpace:
    """
    The right cosets Hx of H in G with G acting by right multiplication.

    Each coset is labelled by its canonical representative, the
    lexicographically least image array among {hx : h in H}; reps are kept
    in sorted order so positions are stable across runs.
    """

    def __init__(self, ambient: Group, subgroup: Group):
        if not subgroup.is_subgroup_of(ambient):
            raise NotASubgroup(
                f"Subgroup of order {subgroup.order} is not contained in the ambient group",
                location="coset_space",
            )
        self.ambient = ambient
        self.subgroup = subgroup

        owner: dict[Perm, Perm] = {}
        for element in ambient.elements:
            if element in owner:
                continue
            coset = [h * element for h in subgroup.elements]
            representative = min(coset)
            for member in coset:
                owner[member] = representative

        self.reps: tuple[Perm, ...] = tuple(sorted(set(owner.values())))
        self._position = {rep: position for position, rep in enumerate(self.reps)}
        self._index = {element: self._position[rep] for element, rep in owner.items()}
        logger.debug(f"Coset space with {len(self.reps)} cosets of a subgroup of order {subgroup.order}")

    def __len__(self) -> int:
        return len(self.reps)

    def index(self, element: Perm) -> int:
        """Position of the coset H*element."""
        return self._index[element]

    def canonical(self, element: Perm) -> Perm:
        if element in self._index:
            return self.reps[self._index[element]]
        return min(h * element for h in self.subgroup.elements)

    def position(self, rep: Perm) -> int:
        return self._position[rep]

    def act(self, rep: Perm, g: Perm) -> Perm:
        """Image of the coset labelled `rep` under right multiplication by g."""
        return self.reps[self._index[rep * g]]

    def act_index(self, position: int, g: Perm) -> int:
        return self._index[self.reps[position] * g]

    def permutation_of(self, g: Perm) -> Perm:
        """The permutation g induces on coset positions."""
        return Perm(tuple(self.act_index(position, g) for position in range(len(self.reps))))


def coset_space(G: Group, H: Group) -> CosetSpace:
    return CosetSpace(G, H)


def kernel_of_action(G: Group, fixes_everything: Callable[[Perm], bool], candidates=None) -> Group:
    candidates = G.elements if candidates is None else candidates
    return Group.from_elements(G.degree, (g for g in candidates if fixes_everything(g)), G.cap)


def action_kernel(G: Group, H: Group) -> Group:
    """
    Kernel of the right-multiplication action of G on [G:H]. This is
    Core_G(H), the largest normal subgroup of G inside H.
    """
    space = coset_space(G, H)
    return kernel_of_action(
        G,
        lambda h: all(space.act(rep, h) == rep for rep in space.reps),
        candidates=H.elements,
    )


def core(G: Group, H: Group) -> Group:
    return action_kernel(G, H)
