import pytest

from src.catalog.families import abelian_pair, hypercube
from src.errors import (
    DegenerateGraph,
    LabelMismatch,
    NotCommuting,
    NotDistinct,
    NotInvolution,
    ValencyTooSmall,
    ZInsideXY,
)
from src.maps.analysis import (
    MapKind,
    classify_vertex_rotary,
    face_stabilizer,
    flag_regular_check,
    map_isomorphic,
    map_kernels,
    maps_equal,
)
from src.maps.constructions import (
    FlagRegularTriple,
    biro_map,
    reg_map,
    regmap_vertex_kernel,
    rota_map,
    validate_flag_regular_triple,
)
from src.maps.surface import orientability, surface_check
from src.permutation_groups.perm import Perm
from src.rotary.pairs import RotaryPair


@pytest.fixture(scope="module")
def cube_regmap(cube):
    x, y, z = (cube.elements[name] for name in ("x", "y", "z"))
    return reg_map(validate_flag_regular_triple(x, y, z))


def test_cube_regmap_counts(cube_regmap):
    assert (len(cube_regmap.graph.vertices), len(cube_regmap.graph.edges), len(cube_regmap.faces)) == (8, 12, 6)
    assert cube_regmap.chi == 2
    assert set(cube_regmap.face_lengths()) == {4}
    assert surface_check(cube_regmap).flags == 48


def test_cube_regmap_is_flag_regular(cube_regmap, cube):
    assert flag_regular_check(cube_regmap, cube.group)
    assert not flag_regular_check(cube_regmap, cube.subgroups["X"])


def test_cube_regmap_kernels(cube_regmap):
    kernels = map_kernels(cube_regmap)
    assert kernels.circular
    assert kernels.G_V.order == 1
    face = next(iter(cube_regmap.faces))
    assert face_stabilizer(cube_regmap, face).order == 8


def test_four_cube_regmap():
    entry = hypercube(4, 1)
    M = reg_map(validate_flag_regular_triple(*(entry.elements[name] for name in ("x", "y", "z"))))
    assert (len(M.graph.vertices), len(M.graph.edges), len(M.faces), M.chi) == (16, 32, 16, 0)


def test_rotamap_of_cube_pair(cube_pair):
    M = rota_map(cube_pair)
    assert (len(M.graph.vertices), len(M.graph.edges), len(M.faces)) == (8, 12, 4)
    assert set(M.face_lengths()) == {6}
    assert M.chi == 0
    assert M.metadata["type"] == "2^Pex"
    assert orientability(M)


def test_hypercube_identities(cube, cube_regmap, cube_pair):
    assert map_isomorphic(cube_regmap, biro_map(cube_pair))
    assert map_isomorphic(cube_regmap, rota_map(RotaryPair(cube.elements["a"], cube.elements["zx"])))
    assert not map_isomorphic(cube_regmap, rota_map(cube_pair))


def test_classification(cube_pair, octahedron_pair):
    for rp in (cube_pair, octahedron_pair):
        assert classify_vertex_rotary(rota_map(rp), rp) is MapKind.Rotary
        assert classify_vertex_rotary(biro_map(rp), rp) is MapKind.BiRotary
    assert MapKind.BiRotary.type_label == "2*ex"


def test_regmap_classified_against_index_two_subgroups(cube, cube_regmap):
    a, z, zx = cube.elements["a"], cube.elements["z"], cube.elements["zx"]
    assert classify_vertex_rotary(cube_regmap, RotaryPair(a, z)) is MapKind.BiRotary
    assert classify_vertex_rotary(cube_regmap, RotaryPair(a, zx)) is MapKind.Rotary


def test_maps_equal(cube_pair, octahedron_pair):
    assert maps_equal(rota_map(cube_pair), rota_map(cube_pair))
    assert not maps_equal(rota_map(cube_pair), biro_map(cube_pair))
    with pytest.raises(LabelMismatch):
        maps_equal(rota_map(cube_pair), rota_map(octahedron_pair))


def test_octahedron_maps(octahedron_pair):
    rotary = rota_map(octahedron_pair)
    assert (len(rotary.faces), rotary.chi) == (8, 2)
    birotary = biro_map(octahedron_pair)
    assert set(birotary.face_lengths()) == {6}
    assert birotary.metadata["type"] == "2*ex"


def test_degenerate_pair_has_no_map():
    entry = abelian_pair(4)
    with pytest.raises(DegenerateGraph):
        rota_map(RotaryPair(entry.elements["a"], entry.elements["z"]))


def test_regmap_vertex_kernel():
    entry = hypercube(3, 2)
    triple = FlagRegularTriple(*(entry.elements[name] for name in ("x", "y", "z")))
    assert triple.parameters() == {"order": 96, "k": 3, "lambda": 2, "m": 4, "lambda_p": 1}
    assert regmap_vertex_kernel(triple).order == 2


def test_invalid_triples():
    def cycles(*spec):
        return Perm.from_cycles(6, spec)

    with pytest.raises(NotInvolution):
        FlagRegularTriple(cycles((0, 1, 2)), cycles((2, 3)), cycles((4, 5)))
    with pytest.raises(NotDistinct):
        FlagRegularTriple(cycles((0, 1)), cycles((0, 1)), cycles((4, 5)))
    with pytest.raises(NotCommuting):
        FlagRegularTriple(cycles((0, 1)), cycles((2, 3)), cycles((1, 2)))
    with pytest.raises(ZInsideXY):
        FlagRegularTriple(cycles((0, 1)), cycles((2, 3)), cycles((0, 1), (2, 3)))
    with pytest.raises(ValencyTooSmall):
        FlagRegularTriple(cycles((0, 1)), cycles((2, 3)), cycles((4, 5)))


def test_exports(cube_regmap):
    export = cube_regmap.to_export(orientable=True)
    assert export.chi == 2
    assert export.orientable
    assert len(export.faces) == 6
    assert len(export.faces[0].boundary_edges) == 4
    assert export.faces[0].boundary_vertices[0].startswith("v")
    assert cube_regmap.to_dot().source.startswith("// f0:")
