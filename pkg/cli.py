import argparse
import sys
from typing import Optional

from dotenv import load_dotenv
from loguru import logger

from src.catalog.families import (
    CatalogEntry,
    abelian_pair,
    core_example,
    dihedral_extender,
    dihedral_pair,
    hypercube,
    knn,
    knn_table_comparison,
    petersen,
)
from src.catalog.three_a6 import three_a6
from src.config import CFG
from src.coset_graphs.construction import CosetGraph, base_graph, kernel_extenders, mu_extenders
from src.coset_graphs.multigraph import MultiGraph
from src.coset_graphs.utils import graph_to_dot, graph_to_export
from src.errors import ParseError, RotaryError
from src.maps.analysis import classify_vertex_rotary, map_kernels
from src.maps.combinatorial_map import CombMap
from src.maps.constructions import biro_map, reg_map, rota_map, validate_flag_regular_triple
from src.maps.surface import flag_graph_bipartite, orientability, surface_check
from src.rotary.pairs import degenerate_class, validate_rotary_pair
from src.utils import (
    dump_json,
    entry_to_group_file,
    load_group_file,
    named_elements,
    parse_names,
    resolve_cap,
    save_group_file,
    select,
    subgroup_of,
)
from src.verification.suites import SUITES, run_suite


def _emit(args: argparse.Namespace, payload) -> None:
    text = dump_json(payload, args.output)
    if args.output is None:
        print(text)


def _emit_dot(args: argparse.Namespace, source: str) -> None:
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(source)
        logger.success(f"DOT saved to {args.output}")
    else:
        print(source)


def _load(args: argparse.Namespace):
    group_file = load_group_file(args.group)
    return group_file, named_elements(group_file)


def _triple_groups(args: argparse.Namespace):
    group_file, elements = _load(args)
    cap = resolve_cap(args.cap)
    G = subgroup_of(elements, args.G, group_file.degree, cap)
    H = subgroup_of(elements, args.H, group_file.degree, cap)
    J = subgroup_of(elements, args.J, group_file.degree, cap)
    return G, H, J


def _graph_payload(graph: MultiGraph, params: Optional[dict] = None) -> dict:
    payload = graph_to_export(graph).model_dump()
    if params is not None:
        payload["params"] = params
    return payload


def cmd_build_graph(args: argparse.Namespace) -> int:
    G, H, J = _triple_groups(args)
    construction = CosetGraph(G, H, J)
    graph, params = construction.graph, construction.params
    if args.format == "dot":
        _emit_dot(args, graph_to_dot(graph).source)
        return 0
    _emit(
        args,
        _graph_payload(
            graph,
            {
                "k": params.k,
                "lambda": params.lam,
                "connected": params.connected,
                "vertices": len(graph.vertices),
                "vertices_formula": G.order // H.order,
                "edges": len(graph.edges),
                "edges_formula": G.order // J.order,
            },
        ),
    )
    return 0


def cmd_base_graph(args: argparse.Namespace) -> int:
    G, H, J = _triple_groups(args)
    graph = base_graph(G, H, J)
    if args.format == "dot":
        _emit_dot(args, graph_to_dot(graph, name="base_graph").source)
    else:
        _emit(args, _graph_payload(graph, {"simple": graph.is_simple(), "vertices": len(graph.vertices), "edges": len(graph.edges)}))
    return 0


def _subgroup_record(group, mu: int) -> dict:
    return {"order": group.order, "mu": mu, "generators": [g.to_list() for g in group.generators]}


def cmd_extenders(args: argparse.Namespace) -> int:
    G, H, J = _triple_groups(args)
    _emit(
        args,
        {
            "subgroups_of_J": [_subgroup_record(group, mu) for group, mu in mu_extenders(G, H, J)],
            "from_kernel": [_subgroup_record(group, mu) for group, mu in kernel_extenders(G, H, J)],
        },
    )
    return 0


def _pair(args: argparse.Namespace, elements: dict):
    if not args.pair:
        raise ParseError("--pair a,z is required", location="--pair")
    a, z = select(elements, parse_names(args.pair, expected=2))
    return validate_rotary_pair(a, z, resolve_cap(args.cap))


def _triple(args: argparse.Namespace, elements: dict):
    if not args.triple:
        raise ParseError("--triple x,y,z is required", location="--triple")
    x, y, z = select(elements, parse_names(args.triple, expected=3))
    return validate_flag_regular_triple(x, y, z, resolve_cap(args.cap))


def _build_map(kind: str, args: argparse.Namespace, elements: dict) -> CombMap:
    if kind == "rotamap":
        return rota_map(_pair(args, elements))
    if kind == "biromap":
        return biro_map(_pair(args, elements))
    return reg_map(_triple(args, elements))


def _emit_map(args: argparse.Namespace, M: CombMap) -> None:
    if args.format == "dot":
        _emit_dot(args, M.to_dot().source)
        return
    payload = M.to_export(orientable=orientability(M)).model_dump()
    payload["counts"] = {
        "vertices": len(M.graph.vertices),
        "edges": len(M.graph.edges),
        "faces": len(M.faces),
        "face_lengths": sorted(set(M.face_lengths())),
    }
    _emit(args, payload)


def _map_command(kind: str):
    def run(args: argparse.Namespace) -> int:
        _, elements = _load(args)
        _emit_map(args, _build_map(kind, args, elements))
        return 0

    return run


def cmd_classify(args: argparse.Namespace) -> int:
    _, elements = _load(args)
    M = _build_map(args.map, args, elements)
    rp = _pair(args, elements)
    kind = classify_vertex_rotary(M, rp)
    _emit(args, {"map": M.construction, "kind": kind.value, "type": kind.type_label})
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    _, elements = _load(args)
    M = _build_map(args.map, args, elements)
    report = surface_check(M)
    kernels = map_kernels(M)
    payload = {
        "map": M.construction,
        "chi": report.chi,
        "flags": report.flags,
        "orientable": orientability(M),
        "flag_graph_bipartite": flag_graph_bipartite(M),
        "vertex_kernel_order": kernels.G_V.order,
        "vertex_face_kernel_order": kernels.G_VF.order,
        "circular": kernels.circular,
    }
    if args.map != "regmap":
        payload["graph_class"] = degenerate_class(_pair(args, elements)).model_dump()
    _emit(args, payload)
    return 0


CATALOG_BUILDERS = {
    "petersen": lambda args: petersen(args.variant),
    "hypercube": lambda args: hypercube(args.n, args.lam),
    "knn": lambda args: knn(args.n, args.lam),
    "three-a6": lambda args: three_a6(),
    "core-example": lambda args: core_example(args.lam),
    "dihedral-extender": lambda args: dihedral_extender(args.n, args.lam),
    "abelian-pair": lambda args: abelian_pair(args.n),
    "dihedral-pair": lambda args: dihedral_pair(args.n),
}


def cmd_catalog(args: argparse.Namespace) -> int:
    entry: CatalogEntry = CATALOG_BUILDERS[args.family](args)
    if args.family == "knn" and args.table:
        _emit(args, knn_table_comparison(args.n, args.lam))
        return 0
    text = save_group_file(entry_to_group_file(entry), args.output)
    if args.output is None:
        print(text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, workers=args.workers, progress=not args.no_progress)
    _emit(args, [result.model_dump() for result in results])
    return 0 if all(result.passed for result in results) else 1


class _JsonErrorParser(argparse.ArgumentParser):
    """Usage errors become ParseError so they reach the JSON error path."""

    def error(self, message: str):
        raise ParseError(message, location=self.prog)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help=f"Largest group order (env {CFG.cap_env_variable})")
    common.add_argument("--format", choices=["json", "dot"], default="json")
    common.add_argument("--output", default=None, help="Write to this file instead of standard output")
    common.add_argument("--log-level", default="WARNING")

    group_input = argparse.ArgumentParser(add_help=False)
    group_input.add_argument("--group", default=None, help="Group file; '-' or omitted reads standard input")
    group_input.add_argument("--G", default=None, help="Ambient group generators (default: all)")

    parser = _JsonErrorParser(description="Arc-transitive coset graphs and their vertex-rotary maps")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, handler, help_text in (
        ("build-graph", cmd_build_graph, "Build Cos(G, H, J)"),
        ("base-graph", cmd_base_graph, "Build the simple base graph Cos(G, H, L)"),
        ("extenders", cmd_extenders, "List extender subgroups"),
    ):
        sub = subparsers.add_parser(name, parents=[common, group_input], help=help_text)
        sub.add_argument("--H", required=True)
        sub.add_argument("--J", required=True)
        sub.set_defaults(handler=handler)

    for name in ("rotamap", "biromap", "regmap"):
        sub = subparsers.add_parser(name, parents=[common, group_input], help=f"Build {name}")
        sub.add_argument("--pair", default=None, help="a,z")
        sub.add_argument("--triple", default=None, help="x,y,z")
        sub.set_defaults(handler=_map_command(name))

    for name, handler in (("classify", cmd_classify), ("check", cmd_check)):
        sub = subparsers.add_parser(name, parents=[common, group_input])
        sub.add_argument("--map", choices=["rotamap", "biromap", "regmap"], required=True)
        sub.add_argument("--pair", default=None)
        sub.add_argument("--triple", default=None)
        sub.set_defaults(handler=handler)

    catalog = subparsers.add_parser("catalog", parents=[common], help="Emit a catalog entry as a group file")
    catalog.add_argument("family", choices=sorted(CATALOG_BUILDERS))
    catalog.add_argument("--variant", choices=["A5", "S5"], default="A5")
    catalog.add_argument("--n", type=int, default=3)
    catalog.add_argument("--lambda", dest="lam", type=int, default=1)
    catalog.add_argument("--table", action="store_true", help="knn: print the reference table comparison")
    catalog.set_defaults(handler=cmd_catalog)

    verify = subparsers.add_parser("verify", parents=[common], help="Run a verification suite")
    verify.add_argument("suite", choices=[*SUITES, "all"])
    verify.add_argument("--workers", type=int, default=None)
    verify.add_argument("--no-progress", action="store_true")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    load_dotenv(dotenv_path=CFG.env_variable_file)
    try:
        args = build_parser().parse_args(argv)
    except ParseError as error:
        print(dump_json(error.to_payload()))
        return 2

    logger.remove()
    logger.add(sys.stderr, level=args.log_level.upper())

    try:
        return args.handler(args)
    except RotaryError as error:
        logger.error(f"{type(error).__name__}: {error}")
        print(dump_json(error.to_payload()))
        return 2
    except Exception:
        logger.exception("Unexpected failure")
        raise


if __name__ == "__main__":
    sys.exit(main())
