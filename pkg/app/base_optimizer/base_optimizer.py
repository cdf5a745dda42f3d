"""閉包系統基底最佳化工具的命令列進入點。

所有子指令讀取 BaseFile / PosetFile / PointsFile 文字檔，結果輸出到標準輸出，
日誌輸出到標準錯誤。結束碼：0 成功、1 判定為否、2 錯誤。
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

import networkx as nx
from pydantic import ValidationError

from .algorithms.affine import affine_base
from .algorithms.closure import close, equivalent
from .algorithms.hypergraph import all_edges_disjoint, build_all_hqcs, build_hqc, has_disjoint_edges
from .algorithms.lattice import enumerate_lattice, is_convex_geometry
from .algorithms.optimizer import (
    canonical_base,
    left_reduce,
    minimize,
    optimize,
    right_reduce,
    verify_optimum,
)
from .algorithms.oracle import oracle_optimum_cg, oracle_quasi_closed_direct, oracle_sigma
from .algorithms.posets import double_shelling_base
from .algorithms.recognition import acceptance_degree, delta_relation, is_acyclic_geometry, random_acyclic_base
from .configs import LogLevel
from .exceptions import BaseOptimizerError
from .models import ImplicationalBase, OptimizationCertificate, SizeReport
from .utils import console
from .utils.file_formats import format_base, parse_base, parse_element_set, parse_points, parse_poset

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_base(path: str) -> ImplicationalBase:
    return parse_base(_read(path))


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _names(s) -> str:
    return " ".join(s.names)


def _print_sizes(report: SizeReport, prefix: str = "") -> None:
    print(f"{prefix}count: {report.count}")
    print(f"{prefix}left: {report.left}")
    print(f"{prefix}right: {report.right}")
    print(f"{prefix}total: {report.total}")


def _print_base(base: ImplicationalBase) -> None:
    """輸出 BaseFile 格式，再以註解行附上大小報表，輸出仍可被解析。"""
    sys.stdout.write(format_base(base.sorted()))
    _print_sizes(base.sizes(), prefix="# ")


def _print_certificate(certificate: Optional[OptimizationCertificate]) -> None:
    """以 `key: value` 行輸出證明，每個本質集一段，段落間以空行分隔。"""
    if certificate is None:
        print("certificate: none")
        return
    print(f"is_convex_geometry: {_flag(certificate.is_convex_geometry)}")
    print(f"is_base: {_flag(certificate.is_base)}")
    print(f"is_left_optimum: {_flag(certificate.is_left_optimum)}")
    print(f"is_optimum: {_flag(certificate.is_optimum)}")
    for entry in certificate.entries:
        print()
        print(f"essential: {_names(entry.essential_set)}")
        print(f"premise: {_names(entry.premise) if entry.premise is not None else '-'}")
        print(f"conclusion: {_names(entry.conclusion)}")
        print(f"implication_count: {entry.implication_count}")
        print(f"premise_is_extreme: {_flag(entry.premise_is_extreme)}")
        print(f"edge_count: {entry.edge_count}")
        print(f"minimum_size: {entry.minimum_size}")
        print(f"is_hitting: {_flag(entry.is_hitting)}")
        print(f"is_minimum: {_flag(entry.is_minimum)}")


# --- 子指令 ---
def cmd_close(args: argparse.Namespace) -> int:
    base = _load_base(args.base)
    print(close(base, parse_element_set(base.universe, args.set)))
    return EXIT_OK


def cmd_equiv(args: argparse.Namespace) -> int:
    verdict = equivalent(_load_base(args.base1), _load_base(args.base2))
    print(f"equivalent: {_flag(verdict)}")
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_sizes(args: argparse.Namespace) -> int:
    _print_sizes(_load_base(args.base).sizes())
    return EXIT_OK


def cmd_canonical(args: argparse.Namespace) -> int:
    _print_base(canonical_base(_load_base(args.base)))
    return EXIT_OK


def cmd_transform(args: argparse.Namespace) -> int:
    """minimize / left-reduce / right-reduce 共用。"""
    transforms = {"minimize": minimize, "left-reduce": left_reduce, "right-reduce": right_reduce}
    _print_base(transforms[args.command](_load_base(args.base)))
    return EXIT_OK


def cmd_optimize(args: argparse.Namespace) -> int:
    result, certificate = optimize(_load_base(args.base))
    _print_base(result)
    if args.certificate:
        print()
        _print_certificate(certificate)
    return EXIT_OK


def cmd_lattice(args: argparse.Namespace) -> int:
    view = enumerate_lattice(_load_base(args.base))
    for c, ex, flag in zip(view.closed_sets, view.extreme_points, view.essential):
        print(f"closed: {c}  extreme: {ex}  essential: {_flag(flag)}")
    print(f"convex_geometry: {_flag(is_convex_geometry(view))}")
    return EXIT_OK


def cmd_hqc(args: argparse.Namespace) -> int:
    base = _load_base(args.base)
    view = enumerate_lattice(base)
    if args.essential is not None:
        hqcs = [build_hqc(base, view, parse_element_set(base.universe, args.essential))]
    else:
        hqcs = build_all_hqcs(base, view)
    for h in hqcs:
        print(f"essential: {_names(h.essential_set)}")
        print(f"extreme: {_names(h.extreme)}")
        print(f"edges: {' '.join(str(e) for e in h.edges)}")
        print(f"disjoint: {_flag(has_disjoint_edges(h))}")
        print()
    verdict = all_edges_disjoint(hqcs)
    print(f"all_disjoint: {_flag(verdict)}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    base = _load_base(args.base)
    view = enumerate_lattice(base)
    convex = is_convex_geometry(view)
    witness = ""
    if args.class_name == "cg":
        verdict = convex
        if not verdict:
            if not view.is_closed(base.universe.empty()):
                witness = "empty set is not closed"
            else:
                stuck = next(
                    c for c in view.closed_sets
                    if c.mask != base.universe.full_mask
                    and not any(view.is_closed(c.with_element(x)) for x in (base.universe.full() - c).names)
                )
                witness = f"closed set {stuck} has no one-element closed extension"
    elif args.class_name == "acyclic":
        verdict = is_acyclic_geometry(base, view)
        if not verdict:
            if not convex:
                witness = "not a convex geometry"
            else:
                graph = nx.DiGraph(list(delta_relation(base)))
                cycle = nx.find_cycle(graph)
                witness = "delta cycle " + " ".join(f"{b}->{a}" for b, a in cycle)
    elif args.class_name == "acceptant":
        if not convex:
            verdict, witness = False, "not a convex geometry"
        else:
            q = acceptance_degree(view)
            verdict = q is not None
            if verdict:
                print(f"q: {q}")
            else:
                witness = "no q satisfies |ex(C)| = min(q, |C|)"
    else:
        hqcs = build_all_hqcs(base, view)
        verdict = all_edges_disjoint(hqcs)
        if not verdict:
            h = next(h for h in hqcs if not has_disjoint_edges(h))
            witness = f"essential set {h.essential_set} has edges {' '.join(str(e) for e in h.edges)}"
    print(f"{args.class_name}: {_flag(verdict)}")
    if witness:
        print(f"witness: {witness}")
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "poset":
        base = double_shelling_base(parse_poset(_read(args.path)))
    elif args.kind == "affine":
        base = affine_base(parse_points(_read(args.path)))
    else:
        base = random_acyclic_base(args.seed, args.size)
    console.info(f"產生 {base.universe.size} 個元素、{len(base)} 條蘊涵的基底")
    sys.stdout.write(format_base(base.sorted()))
    return EXIT_OK


def cmd_verify_optimum(args: argparse.Namespace) -> int:
    certificate = verify_optimum(_load_base(args.base), parse_base(_read(args.candidate)))
    _print_certificate(certificate)
    return EXIT_OK if certificate.is_optimum else EXIT_FALSE


def cmd_oracle(args: argparse.Namespace) -> int:
    base = _load_base(args.base)
    if args.op == "optimum-cg":
        optimum, _ = oracle_optimum_cg(base)
        _print_base(optimum)
        return EXIT_OK
    seed = parse_element_set(base.universe, args.set or "")
    if args.op == "sigma":
        print(oracle_sigma(base, seed))
        return EXIT_OK
    verdict = oracle_quasi_closed_direct(base, seed)
    print(f"quasi_closed: {_flag(verdict)}")
    return EXIT_OK if verdict else EXIT_FALSE


# --- 參數解析 ---
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="base-optimizer",
        description="閉包系統的蘊涵基底分析與凸幾何基底最佳化工具",
    )
    parser.add_argument(
        "--log-level",
        type=LogLevel,
        choices=list(LogLevel),
        default=None,
        help="日誌等級 (預設取自 BASEOPT_LOG_LEVEL)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("close", help="計算集合的閉包")
    p.add_argument("base")
    p.add_argument("--set", required=True, help="以逗號分隔的元素，空字串為空集合")
    p.set_defaults(handler=cmd_close)

    p = sub.add_parser("equiv", help="判定兩個基底是否等價")
    p.add_argument("base1")
    p.add_argument("base2")
    p.set_defaults(handler=cmd_equiv)

    p = sub.add_parser("sizes", help="輸出基底的大小報表")
    p.add_argument("base")
    p.set_defaults(handler=cmd_sizes)

    p = sub.add_parser("canonical", help="輸出標準基底")
    p.add_argument("base")
    p.set_defaults(handler=cmd_canonical)

    for name, text in (("minimize", "最小化"), ("left-reduce", "左化簡"), ("right-reduce", "右化簡")):
        p = sub.add_parser(name, help=text)
        p.add_argument("base")
        p.set_defaults(handler=cmd_transform)

    p = sub.add_parser("optimize", help="最小化後左、右化簡，並可輸出最佳性證明")
    p.add_argument("base")
    p.add_argument("--certificate", action="store_true")
    p.set_defaults(handler=cmd_optimize)

    p = sub.add_parser("lattice", help="列出所有閉集、極點與本質旗標")
    p.add_argument("base")
    p.set_defaults(handler=cmd_lattice)

    p = sub.add_parser("hqc", help="輸出擬閉超圖")
    p.add_argument("base")
    p.add_argument("--essential", default=None, help="只輸出這個本質集，以逗號分隔")
    p.set_defaults(handler=cmd_hqc)

    p = sub.add_parser("check", help="判定凸幾何類別")
    p.add_argument("base")
    p.add_argument(
        "--class", dest="class_name", required=True,
        choices=["cg", "acyclic", "acceptant", "disjoint-edges"],
    )
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("gen", help="產生凸幾何的基底")
    gen = p.add_subparsers(dest="kind", required=True)
    g = gen.add_parser("poset", help="偏序集的雙殼化凸幾何")
    g.add_argument("path")
    g = gen.add_parser("affine", help="點配置的仿射凸幾何")
    g.add_argument("path")
    g = gen.add_parser("random-acyclic", help="隨機無環凸幾何")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--size", type=int, required=True)
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("verify-optimum", help="驗證候選是否為最佳基底")
    p.add_argument("base")
    p.add_argument("candidate")
    p.set_defaults(handler=cmd_verify_optimum)

    p = sub.add_parser("oracle", help="暴力參考實作")
    p.add_argument("base")
    p.add_argument("--op", required=True, choices=["sigma", "quasi", "optimum-cg"])
    p.add_argument("--set", default=None, help="sigma / quasi 使用的集合，以逗號分隔")
    p.set_defaults(handler=cmd_oracle)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """命令列主程式。

    Args:
        argv (Optional[List[str]]): 參數列表；`None` 時使用 `sys.argv[1:]`。

    Returns:
        int: 結束碼。
    """
    args = build_parser().parse_args(argv)
    if args.log_level is not None:
        console.set_log_level(args.log_level)
    try:
        return args.handler(args)
    except BaseOptimizerError as e:
        print(f"error: {e.code}: {e.message}", file=sys.stderr)
    except ValidationError as e:
        message = "; ".join(error["msg"] for error in e.errors())
        print(f"error: INVALID: {message}", file=sys.stderr)
    except OSError as e:
        print(f"error: IO: {e}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
