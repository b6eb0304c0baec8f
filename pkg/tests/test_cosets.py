import pytest

from src.catalog.families import dihedral_group, symmetric_group
from src.errors import NotASubgroup
from src.permutation_groups.cosets import action_kernel, coset_space, core
from src.permutation_groups.group import cyclic, generated, join
from src.permutation_groups.perm import Perm


def test_coset_reps_are_sorted_with_identity_first():
    S3 = symmetric_group(3)
    space = coset_space(S3, cyclic(Perm.from_cycles(3, [(0, 1)])))
    assert len(space) == 3
    assert space.reps[0] == Perm.identity(3)
    assert list(space.reps) == sorted(space.reps)


def test_canonical_is_constant_on_cosets():
    S4 = symmetric_group(4)
    H = generated([Perm.from_cycles(4, [(0, 1)]), Perm.from_cycles(4, [(2, 3)])])
    space = coset_space(S4, H)
    x = Perm.from_cycles(4, [(0, 2, 1)])
    assert all(space.canonical(h * x) == space.canonical(x) for h in H.elements)
    assert space.index(x) == space.position(space.canonical(x))


def test_action_is_a_right_action():
    S4 = symmetric_group(4)
    space = coset_space(S4, cyclic(Perm.from_cycles(4, [(0, 1, 2)])))
    g = Perm.from_cycles(4, [(0, 1)])
    h = Perm.from_cycles(4, [(1, 2, 3)])
    assert space.permutation_of(g * h) == space.permutation_of(g) * space.permutation_of(h)


def test_core_of_sylow_two_in_s4_is_klein_four():
    S4 = symmetric_group(4)
    D8 = join(cyclic(Perm.from_cycles(4, [(0, 1, 2, 3)])), cyclic(Perm.from_cycles(4, [(0, 2)])))
    kernel = core(S4, D8)
    assert kernel.order == 4
    assert kernel.is_normal_in(S4)


def test_core_free_point_stabilizer():
    D10 = dihedral_group(5)
    assert action_kernel(D10, D10.stabilizer(0)).order == 1


def test_non_subgroup_rejected():
    D8 = dihedral_group(4)
    with pytest.raises(NotASubgroup):
        coset_space(D8, cyclic(Perm.from_cycles(4, [(0, 1)])))
