"""
Command Line Interface for germ-lab
"""

import argparse
import json
import pathlib
import sys
from typing import Any, Callable, Dict, List, Optional

from .config.loader import DEFAULT_CONFIG_PATH, Cfg, check_max_degree, default_config, load_config
from .core.blowup import resolve
from .core.chains import hj_expand
from .core.diophantine import (
    DioSol4,
    bounded_solution,
    extend_to_8,
    pr1_inverse,
    pr_inverse,
    solve_aux,
)
from .core.monodromy import GermClass, classify, classify_all
from .core.pairs_tree import Orbit, enumerate_to_level, path_to_root
from .output.dot import chain_to_dot, resolution_to_dot, tree_to_dot
from .output.schemas import (
    AuxSolModel,
    BlowupStepModel,
    DecoratedOrbitModel,
    DioSol4Model,
    ExtSol8Model,
    GermClassModel,
    OrbitModel,
    VerifyReportModel,
    WeightedChainModel,
)
from .pipeline.harness import all_ok, run_suites
from .utils.errors import EnumerationRefused, InvalidInputError, InvariantViolation
from .utils.logging_config import get_logger, setup_logging

logger = get_logger(__name__)

FORMATS = ["table", "json", "dot"]


def _print(fmt: str, payload: Any, table: str, dot: Optional[Callable[[], str]] = None) -> None:
    """Print result in specified format"""
    if fmt == "json":
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    elif fmt == "dot":
        if dot is None:
            raise InvalidInputError("dot output is not available for this command")
        print(dot(), end="")
    else:
        print(table)


def _load(path: Optional[str]) -> Cfg:
    """Explicit --config must exist; the default path is optional"""
    if path is None:
        if pathlib.Path(DEFAULT_CONFIG_PATH).exists():
            return load_config(DEFAULT_CONFIG_PATH)
        return default_config()
    return load_config(path)


def cmd_tree(args: argparse.Namespace, cfg: Cfg) -> int:
    orbits = enumerate_to_level(args.level)
    rows = []
    for o in orbits:
        row: Dict[str, Any] = OrbitModel.from_domain(o).model_dump()
        row["path"] = str(path_to_root(o))
        if args.decorated:
            row["decorated"] = str(pr_inverse(o))
        rows.append(row)
    payload = {"level": args.level, "count": len(rows), "orbits": rows}
    lines = [f"level {args.level}: {len(rows)} orbits"]
    for row, o in zip(rows, orbits):
        extra = f"  {row['decorated']}" if args.decorated else ""
        lines.append(f"  {str(o):<12} {row['path'] or '-'}{extra}")
    _print(args.format, payload, "\n".join(lines), lambda: tree_to_dot(args.level, args.decorated))
    return 0


def _solution(args: argparse.Namespace) -> DioSol4:
    if args.q1 is None or args.q2 is None:
        return bounded_solution(args.k1, args.k2)
    return DioSol4(args.k1, args.k2, args.q1, args.q2)


def cmd_dio_solve(args: argparse.Namespace, cfg: Cfg) -> int:
    s = _solution(args)
    aux = solve_aux(s)
    payload = {
        "solution": DioSol4Model.from_domain(s).model_dump(),
        "aux": AuxSolModel.from_domain(aux).model_dump(),
        "checks": {"eq1_residual": s.residual, "in_dp0": s.in_dp0, "aux_residual": aux.residual},
    }
    table = f"{s}: a1={aux.a1} a2={aux.a2}  (eq1 residual {s.residual}, aux residual {aux.residual})"
    _print(args.format, payload, table)
    return 0


def cmd_dio_extend(args: argparse.Namespace, cfg: Cfg) -> int:
    s = _solution(args)
    ext = extend_to_8(s)
    model = ExtSol8Model.from_domain(ext)
    payload = {
        "extension": model.model_dump(),
        "checks": {
            "eq1_residual": s.residual,
            "violations": model.violations,
            "delta_identity": ext.m1 + ext.m2 + ext.q3 == ext.k1 + ext.k2 - 1,
        },
    }
    table = f"{s} -> q3={ext.q3} q4={ext.q4} m1={ext.m1} m2={ext.m2}  violations: {model.violations or 'none'}"
    _print(args.format, payload, table)
    return 0


def cmd_dio_pr1_inverse(args: argparse.Namespace, cfg: Cfg) -> int:
    o = pr1_inverse(args.k, args.q)
    payload = {"decorated": DecoratedOrbitModel.from_domain(o).model_dump(), "checks": {"eq1_residual": o.sol.residual}}
    _print(args.format, payload, str(o))
    return 0


def cmd_dio_pr_inverse(args: argparse.Namespace, cfg: Cfg) -> int:
    o = pr_inverse(Orbit.of(args.k1, args.k2))
    payload = {"decorated": DecoratedOrbitModel.from_domain(o).model_dump(), "checks": {"eq1_residual": o.sol.residual}}
    _print(args.format, payload, str(o))
    return 0


def cmd_hj(args: argparse.Namespace, cfg: Cfg) -> int:
    chain = hj_expand(args.k, args.q)
    payload = {"k": args.k, "q": args.q, **WeightedChainModel.from_domain(chain).model_dump()}
    _print(args.format, payload, f"{args.k}/{args.q} = {chain}", lambda: chain_to_dot(chain))
    return 0


def cmd_resolve(args: argparse.Namespace, cfg: Cfg) -> int:
    res = resolve(args.k1, args.k2)
    chain = res.graph.chain
    payload: Dict[str, Any] = {
        "k1": res.k1,
        "k2": res.k2,
        "weights": list(chain.weights),
        "center_index": chain.center_index,
        "sbar": list(res.sbar.as_tuple()),
        "blowups": res.blowups,
        "multiplicity": res.multiplicity,
    }
    lines = [
        f"({res.k1},{res.k2}): chain {chain}  sbar {res.sbar.as_tuple()}  blowups {res.blowups}",
    ]
    if args.trace:
        payload["trace"] = [BlowupStepModel.from_domain(s).model_dump(mode="json") for s in res.trace]
        for s in res.trace:
            label = s.label.value if s.label else "final"
            lines.append(f"  {s.index}: {s.before} -> {s.after or '-'}  {label}  new E{s.created} through {list(s.through)}")
    _print(args.format, payload, "\n".join(lines), lambda: resolution_to_dot(res))
    return 0


def _class_line(g: GermClass, witness: bool) -> str:
    check = "cross-checked" if g.cross_checked else "not cross-checked"
    line = (
        f"({g.k1},{g.k2}): {g.family.value} degree {g.degree} mu {g.mu} "
        f"classes {g.class_count}/{g.expected_count} ({check})"
    )
    if g.subcase:
        line += f" subcase {g.subcase}"
    if witness and g.witness is not None:
        line += f"\n  witness {g.witness}"
    return line


def cmd_classify(args: argparse.Namespace, cfg: Cfg) -> int:
    max_degree = cfg.enumeration.max_degree if args.max_degree is None else check_max_degree(args.max_degree)
    threads = cfg.workers.threads
    if args.all:
        classes = classify_all(args.k1, args.k2, max_degree, threads)
        payload: Any = [GermClassModel.from_domain(g).model_dump(mode="json") for g in classes]
    else:
        classes = [classify(args.k1, args.k2, max_degree, threads)]
        payload = GermClassModel.from_domain(classes[0]).model_dump(mode="json")
    _print(args.format, payload, "\n".join(_class_line(g, args.witness) for g in classes))
    return 0


def cmd_verify(args: argparse.Namespace, cfg: Cfg) -> int:
    reports = run_suites(args.suite or ["all"], args.bound, cfg=cfg)
    ok = all_ok(reports)
    payload = {"ok": ok, "reports": [VerifyReportModel.from_domain(r).model_dump() for r in reports]}
    lines = []
    for r in reports:
        status = "OK" if r.ok else "FAIL"
        lines.append(f"{r.suite:<8} bound {r.bound:<5} cases {r.cases:<8} failures {len(r.failures):<4} {r.wall_time_s:.2f}s  {status}")
        for f in r.failures:
            lines.append(f"    {f.case}: inputs={f.inputs} expected={f.expected} actual={f.actual}")
    _print(args.format, payload, "\n".join(lines))
    return 0 if ok else 1


def cmd_serve(args: argparse.Namespace, cfg: Cfg) -> int:
    import uvicorn

    uvicorn.run("germlab.api:app", host=args.host, port=args.port)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="germ-lab",
        description="germ-lab - invariants of germs branched along x^k1 - y^k2 = 0",
    )
    ap.add_argument("--config", default=None, help=f"Configuration file path (default: {DEFAULT_CONFIG_PATH} if present)")
    ap.add_argument("--quiet", action="store_true", help="Only log errors")
    ap.add_argument("--verbose", action="store_true", help="Log debug output")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default=None, help="Output format (default: from config)")

    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tree", parents=[fmt], help="Orbits at one level of the orbit tree")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--decorated", action="store_true", help="Show {k1/q1,k2/q2} decorations")
    p.set_defaults(func=cmd_tree)

    dio = sub.add_parser("dio", help="Diophantine systems").add_subparsers(dest="dio_command", required=True)
    for name, func, text in [
        ("solve", cmd_dio_solve, "Solve the auxiliary system for a bounded solution"),
        ("extend", cmd_dio_extend, "Extend a bounded solution to the eight-variable system"),
    ]:
        p = dio.add_parser(name, parents=[fmt], help=text)
        p.add_argument("--k1", type=int, required=True)
        p.add_argument("--k2", type=int, required=True)
        p.add_argument("--q1", type=int, default=None, help="Default: the bounded solution over (k1,k2)")
        p.add_argument("--q2", type=int, default=None)
        p.set_defaults(func=func)
    p = dio.add_parser("pr1-inverse", parents=[fmt], help="Decorated orbit with left component k/q")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_dio_pr1_inverse)
    p = dio.add_parser("pr-inverse", parents=[fmt], help="Decorated orbit over {k1,k2}")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.set_defaults(func=cmd_dio_pr_inverse)

    p = sub.add_parser("hj", parents=[fmt], help="Hirzebruch-Jung expansion of k/q")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_hj)

    p = sub.add_parser("resolve", parents=[fmt], help="Blowup resolution of x^k1 - y^k2")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="Show every blowup")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("classify", parents=[fmt], help="Classify germs over x^k1 - y^k2")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=None, help="Exhaustive enumeration cap")
    p.add_argument("--witness", action="store_true", help="Show a witness monodromy datum")
    p.add_argument("--all", action="store_true", help="Every family the pair belongs to")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[fmt], help="Run verification suites")
    p.add_argument("--suite", action="append", default=None, help="Suite or alias, repeatable (default: all)")
    p.add_argument("--bound", type=int, default=None, help="Bound for every suite (default: per suite, from config)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="Start the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return ap


def run_command(argv: List[str]) -> int:
    """
    Parse argv and run one subcommand

    Returns:
        0 on success, 1 on a verification failure or broken invariant,
        2 on a usage error
    """
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        cfg = _load(args.config)
    except (RuntimeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    if args.quiet:
        level = "ERROR"
    elif args.verbose:
        level = "DEBUG"
    else:
        level = cfg.logging.level
    setup_logging(level, cfg.logging.format)

    if getattr(args, "format", None) is None:
        args.format = cfg.output.format

    func: Callable[[argparse.Namespace, Cfg], int] = args.func
    try:
        return func(args, cfg)
    except (InvalidInputError, EnumerationRefused) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InvariantViolation as e:
        logger.error(f"invariant violated: {e} inputs={e.inputs} expected={e.expected} actual={e.actual}")
        print(f"error: invariant violated: {e}", file=sys.stderr)
        return 1


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point"""
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
