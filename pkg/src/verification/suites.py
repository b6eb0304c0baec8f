from concurrent.futures import ThreadPoolExecutor, as_completed
from math import gcd
from typing import Any, Callable, Optional

from loguru import logger
from pydantic import BaseModel, Field
from tqdm import tqdm

from src.catalog.families import hypercube, knn, knn_table_comparison, petersen
from src.catalog.three_a6 import three_a6
from src.coset_graphs.construction import (
    CosetGraph,
    arc_reverser,
    base_graph,
    edge_kernel,
    mu_extenders,
    quotient_core,
    simp_cos,
)
from src.coset_graphs.isomorphism import graph_isomorphic
from src.coset_graphs.utils import kneser_graph
from src.errors import RotaryError, UnknownName
from src.maps.analysis import MapKind, classify_vertex_rotary, flag_regular_check, map_isomorphic, map_kernels, maps_equal
from src.maps.combinatorial_map import CombMap
from src.maps.constructions import biro_map, reg_map, rota_map, validate_flag_regular_triple
from src.maps.surface import orientability, surface_check
from src.permutation_groups.cosets import core
from src.permutation_groups.group import cyclic, join
from src.rotary.cycles import classify_induced, seq_class_equal
from src.rotary.pairs import CycleKind, RotaryPair, canonical_cycle
from src.verification.corpus import PairCase, build_pair, coset_triples, rotary_pairs

Outcome = tuple[bool, dict[str, Any]]


class CheckResult(BaseModel):
    check: str = Field(description="Check identifier, <suite>.<case>")
    passed: bool
    detail: dict[str, Any] = Field(default_factory=dict)


def _certify(M: CombMap) -> Outcome:
    """Surface check plus: every boundary is a regular cycle, all of one sequence class type."""
    report = surface_check(M)
    kinds = {classify_induced(boundary).label for boundary in M.faces.values()}
    regular = "not regular" not in kinds and len(kinds) == 1
    return regular, {"chi": report.chi, "flags": report.flags, "boundaries": sorted(kinds)}


def _merge(*outcomes: Outcome) -> Outcome:
    detail: dict[str, Any] = {}
    for _, part in outcomes:
        detail.update(part)
    return all(passed for passed, _ in outcomes), detail


def _counts(M: CombMap) -> dict[str, int]:
    return {"V": len(M.graph.vertices), "E": len(M.graph.edges), "F": len(M.faces)}


# petersen


def _petersen_kneser() -> Outcome:
    entry = petersen("A5")
    G, H, J = entry.group, entry.subgroups["H"], entry.subgroups["J"]
    base = base_graph(G, H, J)
    isomorphic, _ = graph_isomorphic(base, kneser_graph(5, 2))
    vertex = base.vertices[0]
    detail = {
        "vertices": len(base.vertices),
        "edges": len(base.edges),
        "valency": base.valency(vertex),
        "girth": base.girth(),
        "isomorphic": isomorphic,
    }
    passed = isomorphic and (detail["vertices"], detail["edges"], detail["valency"], detail["girth"]) == (10, 15, 3, 5)
    return passed, detail


def _petersen_extenders(variant: str, mu: int) -> Callable[[], Outcome]:
    def run() -> Outcome:
        entry = petersen(variant)
        found = mu_extenders(entry.group, entry.subgroups["H"], entry.subgroups["L"])
        proper = [value for _, value in found if value > 1]
        return proper.count(mu) == 2, {"variant": variant, "multiplicities": proper, "expected_mu": mu}

    return run


def _petersen_multigraph() -> Outcome:
    entry = petersen("A5")
    construction = CosetGraph(entry.group, entry.subgroups["H"], entry.subgroups["J"])
    params = construction.params
    detail = {"vertices": len(construction.graph.vertices), "edges": len(construction.graph.edges), "k": params.k, "lambda": params.lam}
    return (detail["vertices"], detail["edges"], params.k, params.lam) == (10, 30, 3, 2), detail


def petersen_suite() -> dict[str, Callable[[], Outcome]]:
    return {
        "petersen.kneser": _petersen_kneser,
        "petersen.multigraph": _petersen_multigraph,
        "petersen.extenders-A5": _petersen_extenders("A5", 2),
        "petersen.extenders-S5": _petersen_extenders("S5", 4),
    }


# coset-graph theorems


def _coset_theorems(G, H, J) -> Callable[[], Outcome]:
    def run() -> Outcome:
        construction = CosetGraph(G, H, J)
        graph, params = construction.graph, construction.params
        base_vertex = construction.vertex_space.reps[0]
        neighbour = graph.neighbours(base_vertex)[0]
        counted = (graph.valency(base_vertex), graph.multiplicity(base_vertex, neighbour))

        base = base_graph(G, H, J)
        simple, _ = graph_isomorphic(base, simp_cos(G, H, params.g))
        kernel_matches = edge_kernel(G, H, J) == core(G, J)
        connected = graph.is_connected() == (join(H, J).order == G.order)

        others = [j for j in J.elements if j not in H and j != params.g]
        invariant = True
        if others:
            other_graph = CosetGraph(G, H, J, g=max(others)).graph
            invariant, _ = graph_isomorphic(graph, other_graph)
        _, quotient = quotient_core(G, H, J)
        quotient_isomorphic, _ = graph_isomorphic(graph, quotient)

        detail = {
            "counted": list(counted),
            "formula": [params.k, params.lam],
            "base_is_simpcos": simple,
            "edge_kernel_is_core": kernel_matches,
            "connectivity": connected,
            "g_invariance": invariant,
            "quotient_isomorphic": quotient_isomorphic,
        }
        passed = counted == (params.k, params.lam) and all(
            [simple, kernel_matches, connected, invariant, quotient_isomorphic]
        )
        return passed, detail

    return run


def coset_theorem_suite() -> dict[str, Callable[[], Outcome]]:
    return {f"coset-theorems.{triple.label}": _coset_theorems(triple.G, triple.H, triple.J) for triple in coset_triples()}


# canonical cycles


def _cycles(case: PairCase) -> Callable[[], Outcome]:
    def run() -> Outcome:
        rp = build_pair(case)
        az_cycle, az_stabilizer, lam_p = canonical_cycle(rp, CycleKind.AZ)
        zza_cycle, zza_stabilizer, lam_pp = canonical_cycle(rp, CycleKind.ZZa)
        mirror_az, _, _ = canonical_cycle(rp, CycleKind.AinvZ)
        mirror_zza, _, _ = canonical_cycle(rp, CycleKind.ZZainv)

        az_kind = classify_induced(az_cycle)
        zza_kind = classify_induced(zza_cycle)
        checks = {
            "az_length": len(az_cycle) == rp.m,
            "az_stabilizer": az_stabilizer == cyclic(rp.az),
            "zza_length": len(zza_cycle) == 2 * rp.ell,
            "zza_stabilizer": zza_stabilizer == rp.W and rp.W.order == 2 * rp.ell,
            "az_induced": (az_kind.n, az_kind.multiplicity) == (rp.m // lam_p, lam_p),
            "zza_induced": (zza_kind.n, zza_kind.multiplicity) == (2 * rp.ell // lam_pp, lam_pp),
            "az_mirror_differs": not seq_class_equal(az_cycle, mirror_az),
            "zza_mirror_differs": not seq_class_equal(zza_cycle, mirror_zza),
        }
        return all(checks.values()), {**checks, "az": az_kind.label, "zza": zza_kind.label}

    return run


def cycle_suite() -> dict[str, Callable[[], Outcome]]:
    return {f"cycles.{case.label}": _cycles(case) for case in rotary_pairs()}


# hypercube


def _hypercube_maps(n: int, lam: int) -> tuple[CombMap, CombMap, CombMap]:
    entry = hypercube(n, lam)
    x, y, z, a, zx = (entry.elements[name] for name in ("x", "y", "z", "a", "zx"))
    regular = reg_map(validate_flag_regular_triple(x, y, z))
    return regular, biro_map(RotaryPair(a, z)), rota_map(RotaryPair(a, zx))


def _hypercube_identity(n: int, lam: int) -> Callable[[], Outcome]:
    def run() -> Outcome:
        regular, birotary, rotary = _hypercube_maps(n, lam)
        checks = {
            "regmap_is_birotary_X": map_isomorphic(regular, birotary),
            "regmap_is_rotary_Y": map_isomorphic(regular, rotary),
            "square_faces": all(
                len(boundary) == 4 and classify_induced(boundary).tag == "SimpleCycle"
                for boundary in regular.faces.values()
            ),
            "circular": map_kernels(regular).circular,
        }
        outcome = _merge((all(checks.values()), checks), *(_certify(M) for M in (regular, birotary, rotary)))
        if (n, lam) == (3, 1):
            cube = hypercube(n, lam)
            flag_regular = flag_regular_check(regular, cube.group)
            report = surface_check(regular)
            cube_ok = report.chi == 2 and report.flags == 48 and flag_regular
            outcome = _merge(outcome, (cube_ok, {"flag_regular": flag_regular}))
        return outcome[0], {**outcome[1], **_counts(regular)}

    return run


def _hypercube_rotary(n: int, lam: int) -> Callable[[], Outcome]:
    def run() -> Outcome:
        entry = hypercube(n, lam)
        M = rota_map(RotaryPair(entry.elements["a"], entry.elements["z"]))
        multiplicity = lam // gcd(2, lam)
        kinds = {(kind.n, kind.multiplicity) for kind in map(classify_induced, M.faces.values())}
        checks = {
            "face_length": set(M.face_lengths()) == {2 * n * lam // gcd(2, lam)},
            "boundary": kinds == {(2 * n, multiplicity)},
            "circular": map_kernels(M).circular == (lam <= 2),
        }
        if (n, lam) == (3, 1):
            checks["cube_counts"] = len(M.faces) == 4 and M.chi == 0
        return _merge((all(checks.values()), checks), _certify(M), (True, _counts(M)))

    return run


def hypercube_identity_suite() -> dict[str, Callable[[], Outcome]]:
    return {f"hypercube-identity.{n}-{lam}": _hypercube_identity(n, lam) for n, lam in ((3, 1), (3, 2), (4, 1))}


def hypercube_rotary_suite() -> dict[str, Callable[[], Outcome]]:
    return {f"hypercube-rotary.{n}-{lam}": _hypercube_rotary(n, lam) for n, lam in ((3, 1), (3, 2), (3, 4), (4, 1))}


# K_{n,n}


def _knn(n: int, lam: int) -> Callable[[], Outcome]:
    def run() -> Outcome:
        comparison = knn_table_comparison(n, lam)
        entry = knn(n, lam)
        M = rota_map(RotaryPair(entry.elements["a"], entry.elements["z"]))
        lam_p = comparison.computed_lambda_p
        kinds = {(kind.n, kind.multiplicity) for kind in map(classify_induced, M.faces.values())}
        checks = {
            "m_formula": comparison.computed_m == comparison.formula_m,
            "lambda_p_formula": comparison.computed_lambda_p == comparison.formula_lambda_p,
            "boundary": kinds == {(2 * n, lam_p)} and comparison.computed_m == 2 * n * lam_p,
            "circular": map_kernels(M).circular == comparison.circular,
        }
        if (n, lam) == (5, 6):
            checks["mu3_row"] = comparison.computed_m == 10 and lam_p == 1 and comparison.circular
        # the reference table is reported, not enforced
        return _merge((all(checks.values()), checks), _certify(M), (True, {"table": comparison.model_dump(by_alias=True)}))

    return run


def knn_suite() -> dict[str, Callable[[], Outcome]]:
    return {f"knn.{n}-{lam}": _knn(n, lam) for n, lam in ((3, 4), (3, 8), (5, 6), (5, 4))}


# 3.A6


def _three_a6() -> Outcome:
    entry = three_a6()
    a, z, a11 = entry.elements["a"], entry.elements["z"], entry.elements["a11"]
    first, second = RotaryPair(a, z), RotaryPair(a11, z)
    same_subgroups = first.A == second.A and first.Z == second.Z and first.W == second.W
    first_map, second_map = biro_map(first), biro_map(second)
    distinct = not maps_equal(first_map, second_map)

    outcomes = [(same_subgroups and distinct, {"same_subgroups": same_subgroups, "maps_differ": distinct})]
    for label, M in (("a", first_map), ("a11", second_map)):
        counts = _counts(M)
        shape = counts == {"V": 72, "E": 540, "F": 108} and set(M.face_lengths()) == {10}
        circular = map_kernels(M).circular
        certified, detail = _certify(M)
        outcomes.append(
            (shape and circular and certified and detail["chi"] == -360, {f"{label}.{key}": value for key, value in {**counts, **detail, "circular": circular}.items()})
        )
    return _merge(*outcomes)


def three_a6_suite() -> dict[str, Callable[[], Outcome]]:
    return {"three-a6.birotary-maps-differ": _three_a6}


# classification


def _classification(case: PairCase) -> Callable[[], Outcome]:
    def run() -> Outcome:
        rp = build_pair(case)
        rotary, birotary = rota_map(rp), biro_map(rp)
        checks = {
            "rotamap": classify_vertex_rotary(rotary, rp) is MapKind.Rotary,
            "biromap": classify_vertex_rotary(birotary, rp) is MapKind.BiRotary,
            "rotamap_orientable": orientability(rotary),
        }
        return _merge((all(checks.values()), checks), _certify(rotary), _certify(birotary))

    return run


def _regmap_classification() -> Outcome:
    cube = hypercube(3, 1)
    x, y, z, a, zx = (cube.elements[name] for name in ("x", "y", "z", "a", "zx"))
    regular = reg_map(validate_flag_regular_triple(x, y, z))
    checks = {
        "X_birotary": classify_vertex_rotary(regular, RotaryPair(a, z)) is MapKind.BiRotary,
        "Y_rotary": classify_vertex_rotary(regular, RotaryPair(a, zx)) is MapKind.Rotary,
    }
    return all(checks.values()), checks


def classification_suite() -> dict[str, Callable[[], Outcome]]:
    checks = {f"classification.{case.label}": _classification(case) for case in rotary_pairs()}
    checks["classification.cube-regmap"] = _regmap_classification
    return checks


SUITES: dict[str, Callable[[], dict[str, Callable[[], Outcome]]]] = {
    "petersen": petersen_suite,
    "coset-theorems": coset_theorem_suite,
    "cycles": cycle_suite,
    "hypercube-identity": hypercube_identity_suite,
    "hypercube-rotary": hypercube_rotary_suite,
    "knn": knn_suite,
    "three-a6": three_a6_suite,
    "classification": classification_suite,
}


def _run_check(check: str, run: Callable[[], Outcome]) -> CheckResult:
    try:
        passed, detail = run()
    except RotaryError as error:
        logger.error(f"{check} raised {type(error).__name__}: {error}")
        return CheckResult(check=check, passed=False, detail=error.to_payload())
    except Exception as error:
        logger.exception(f"{check} crashed")
        return CheckResult(check=check, passed=False, detail={"error": type(error).__name__, "message": str(error)})
    if passed:
        logger.success(f"{check} passed")
    else:
        logger.warning(f"{check} failed: {detail}")
    return CheckResult(check=check, passed=passed, detail=detail)


def collect_checks(suite: str) -> dict[str, Callable[[], Outcome]]:
    if suite == "all":
        checks: dict[str, Callable[[], Outcome]] = {}
        for build in SUITES.values():
            checks.update(build())
        return checks
    if suite not in SUITES:
        raise UnknownName(f"Unknown suite {suite!r}; choose from {', '.join([*SUITES, 'all'])}", location="suite")
    return SUITES[suite]()


def run_suite(suite: str, workers: Optional[int] = None, progress: bool = True) -> list[CheckResult]:
    """Run every check of a named suite in a thread pool; results are sorted by check id."""
    checks = collect_checks(suite)
    results = []
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(_run_check, check, run) for check, run in checks.items()]
        for future in tqdm(as_completed(futures), total=len(futures), desc=f"verify {suite}", disable=not progress):
            results.append(future.result())
    results.sort(key=lambda result: result.check)
    logger.info(f"{suite}: {sum(result.passed for result in results)}/{len(results)} checks passed")
    return results
