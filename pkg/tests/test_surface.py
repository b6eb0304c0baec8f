import pytest

from src.coset_graphs.utils import cycle_graph
from src.errors import NotASurface
from src.maps.combinatorial_map import CombMap
from src.maps.constructions import biro_map, rota_map
from src.maps.surface import flag_graph_bipartite, flag_system, orientability, surface_check
from src.rotary.cycles import CycleSeq


def test_two_faced_polygon_is_a_sphere():
    graph = cycle_graph(4)
    boundary = CycleSeq.from_edges(graph, [0, 1, 2, 3])
    M = CombMap(graph, [("inside", boundary), ("outside", boundary.reversed())])
    report = surface_check(M)
    assert (report.chi, report.flags) == (2, 16)
    assert orientability(M)
    assert flag_graph_bipartite(M)
    assert len(flag_system(M).components()) == 1


def test_single_face_is_not_a_surface():
    graph = cycle_graph(4)
    M = CombMap(graph, [("only", CycleSeq.from_edges(graph, [0, 1, 2, 3]))])
    with pytest.raises(NotASurface):
        surface_check(M)


def test_flag_involutions(cube_pair):
    system = flag_system(rota_map(cube_pair))
    assert len(system) == 48
    for involution in (system.r0, system.r1, system.r2):
        assert all(involution[involution[i]] == i and involution[i] != i for i in range(len(system)))


@pytest.mark.parametrize("build", [rota_map, biro_map])
def test_orientability_oracles_agree(build, cube_pair, octahedron_pair):
    for rp in (cube_pair, octahedron_pair):
        M = build(rp)
        assert orientability(M) == flag_graph_bipartite(M)
