import pytest

from src.catalog.families import abelian_pair, dihedral_pair, hypercube
from src.errors import DegenerateGraph, DegreeMismatch, ZInsideA, ZNotInvolution
from src.permutation_groups.perm import Perm
from src.rotary.pairs import (
    RotaryPair,
    collapses_to_two_vertices,
    degenerate_class,
    kernel_normality,
    require_general,
    vertex_kernel,
    vertex_rotary_graph,
)


def test_cube_pair_parameters(cube_pair):
    assert cube_pair.parameters() == {
        "order": 24,
        "k": 3,
        "lambda": 1,
        "m": 6,
        "ell": 2,
        "lambda_p": 1,
        "lambda_pp": 1,
    }
    graph, params = vertex_rotary_graph(cube_pair)
    assert (len(graph.vertices), len(graph.edges)) == (8, 12)
    assert (params.k, params.lam) == (3, 1)


def test_octahedron_pair(octahedron_pair):
    assert octahedron_pair.G.order == 24
    assert (octahedron_pair.k, octahedron_pair.lam, octahedron_pair.m, octahedron_pair.ell) == (4, 1, 3, 3)
    assert len(octahedron_pair.graph.vertices) == 6


def test_vertex_kernel_matches_action_kernel():
    entry = hypercube(3, 2)
    rp = RotaryPair(entry.elements["a"], entry.elements["z"])
    kernel = vertex_kernel(rp)
    assert kernel.order == 2
    assert kernel == rp.vertex_kernel_formula


def test_invalid_pairs():
    a = Perm.from_cycles(4, [(0, 1, 2, 3)])
    with pytest.raises(ZNotInvolution):
        RotaryPair(a, Perm.from_cycles(4, [(0, 1, 2)]))
    with pytest.raises(ZInsideA):
        RotaryPair(a, a * a)
    with pytest.raises(DegreeMismatch):
        RotaryPair(a, Perm.from_cycles(5, [(0, 1)]))


def test_degenerate_classes(cube_pair):
    abelian = abelian_pair(4)
    rp = RotaryPair(abelian.elements["a"], abelian.elements["z"])
    assert degenerate_class(rp).tag == "TwoVertexExtender"
    assert collapses_to_two_vertices(rp)
    with pytest.raises(DegenerateGraph):
        require_general(rp)

    dihedral = dihedral_pair(5)
    rp = RotaryPair(dihedral.elements["a"], dihedral.elements["z"])
    assert degenerate_class(rp).model_dump() == {"tag": "SimpleCycleGraph", "r": 5}

    assert degenerate_class(cube_pair).tag == "General"
    assert not collapses_to_two_vertices(cube_pair)


def test_face_kernels_are_normal(cube_pair):
    assert kernel_normality(cube_pair)
