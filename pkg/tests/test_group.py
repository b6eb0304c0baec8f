import pytest

from src.catalog.families import alternating_group, cyclic_group, dihedral_group, direct_product, symmetric_group
from src.errors import CapExceeded, NotASubgroup, SubgroupLimitExceeded
from src.permutation_groups.group import Group, closure, conjugate, cyclic, generated, intersect, join, subgroups
from src.permutation_groups.perm import Perm


@pytest.mark.parametrize(
    "group, order",
    [
        (symmetric_group(4), 24),
        (symmetric_group(5), 120),
        (alternating_group(5), 60),
        (dihedral_group(6), 12),
        (cyclic_group(7), 7),
    ],
)
def test_orders(group, order):
    assert group.order == order


def test_closure_starts_with_identity():
    elements = closure([Perm.from_cycles(4, [(0, 1, 2, 3)])])
    assert elements[0] == Perm.identity(4)
    assert len(elements) == 4


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        closure(symmetric_group(5).generators, cap=100)


def test_membership_and_subgroups():
    S4 = symmetric_group(4)
    V4 = generated([Perm.from_cycles(4, [(0, 1), (2, 3)]), Perm.from_cycles(4, [(0, 2), (1, 3)])])
    assert V4.order == 4
    assert V4.is_subgroup_of(S4)
    assert V4.is_normal_in(S4)
    assert V4.is_abelian()
    assert not generated([Perm.from_cycles(4, [(0, 1)])]).is_normal_in(S4)


def test_intersect_join_conjugate():
    S4 = symmetric_group(4)
    a = cyclic(Perm.from_cycles(4, [(0, 1, 2, 3)]))
    b = cyclic(Perm.from_cycles(4, [(0, 2)]))
    assert intersect(a, b).order == 1
    assert join(a, b).order == 8
    g = Perm.from_cycles(4, [(0, 1)])
    assert conjugate(b, g) == cyclic(Perm.from_cycles(4, [(1, 2)]))
    assert join(a, cyclic(g)) == S4


def test_orbit_stabilizer_and_center():
    D8 = dihedral_group(4)
    assert sorted(D8.orbit(0)) == [0, 1, 2, 3]
    assert D8.stabilizer(0).order == 2
    assert D8.center().order == 2


def test_direct_product_order():
    product = direct_product(dihedral_group(4), cyclic_group(3))
    assert product.degree == 7
    assert product.order == 24


def test_subgroup_lattice_of_s4():
    lattice = subgroups(symmetric_group(4))
    assert len(lattice) == 30
    assert lattice[0].order == 1
    assert lattice[-1].order == 24


def test_subgroup_limit():
    with pytest.raises(SubgroupLimitExceeded):
        subgroups(symmetric_group(5), limit=100)


def test_from_elements_keeps_identity_first():
    group = Group.from_elements(3, [Perm([1, 0, 2]), Perm.identity(3)])
    assert group.elements[0] == Perm.identity(3)
    assert group.order == 2


@pytest.mark.parametrize(
    "group",
    [symmetric_group(4), alternating_group(5), dihedral_group(5), direct_product(dihedral_group(4), cyclic_group(3))],
)
def test_order_agrees_with_schreier_sims(group):
    assert group.to_sympy().order() == group.order


def test_from_elements_requires_identity():
    with pytest.raises(NotASubgroup):
        Group.from_elements(3, [Perm.from_cycles(3, [(0, 1)])])


def test_subgroup_lattice_of_s5():
    lattice = subgroups(symmetric_group(5))
    assert len(lattice) == 156
    assert sum(1 for group in lattice if group.order == 60) == 1
    assert all(group.is_subgroup_of(lattice[-1]) for group in lattice)
