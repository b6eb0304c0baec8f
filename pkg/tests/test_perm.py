import pytest

from src.errors import DegreeMismatch, InvalidPermutation
from src.permutation_groups.perm import Perm, element_order


def test_product_applies_left_factor_first():
    p = Perm.from_cycles(3, [(0, 1)])
    q = Perm.from_cycles(3, [(1, 2)])
    assert (p * q)(0) == 2
    assert (q * p)(0) == 1


def test_inverse_and_negative_powers():
    p = Perm.from_cycles(5, [(0, 1, 2, 3, 4)])
    assert p * ~p == Perm.identity(5)
    assert p ** -1 == ~p
    assert p**5 == Perm.identity(5)
    assert p**7 == p**2


def test_conjugation_convention():
    p = Perm.from_cycles(4, [(0, 1)])
    g = Perm.from_cycles(4, [(1, 2, 3)])
    assert p.conj(g) == ~g * p * g
    assert p.conj(g) == Perm.from_cycles(4, [(0, 2)])


def test_cycles_and_order():
    p = Perm.from_cycles(7, [(0, 1, 2), (3, 4)])
    assert p.cycles() == [(0, 1, 2), (3, 4)]
    assert element_order(p) == 6
    assert p.order() == 6
    assert element_order(Perm.identity(3)) == 1


def test_commutes_with():
    a = Perm.from_cycles(6, [(0, 1, 2, 3)])
    z = Perm.from_cycles(6, [(4, 5)])
    assert a.commutes_with(z)
    assert not a.commutes_with(Perm.from_cycles(6, [(0, 4)]))


def test_invalid_images_rejected():
    with pytest.raises(InvalidPermutation):
        Perm([0, 0, 1])
    with pytest.raises(InvalidPermutation):
        Perm.from_cycles(3, [(0, 3)])


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        Perm.identity(3) * Perm.identity(4)


def test_ordering_and_hash_follow_images():
    p = Perm([1, 0, 2])
    assert Perm.identity(3) < p
    assert len({p, Perm([1, 0, 2])}) == 1
    assert p.to_list() == [1, 0, 2]


def test_backed_by_sympy_permutation():
    p = Perm.from_cycles(6, [(0, 3), (1, 4, 5)])
    native = p.to_sympy()
    assert native.size == 6
    assert native.order() == p.order() == 6
    assert Perm.from_sympy(native**2) == p * p
    assert Perm.from_sympy(~native) == ~p
