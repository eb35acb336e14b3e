"""Command-line frontend.

Subcommands: solve (exact DST or Dominating Set), approx (greedy
Dominating Set), gen (instance generators), verify (check a solution
file), oracle (brute-force reference), bench (CSV timings).

Exit codes: 0 solved or proven infeasible, 1 failed verification,
2 usage error, 3 parse error, 4 oracle size-guard refusal, 5 timeout.
Exact solvers never report partial results: hitting the time limit is
exit 5 with no solution line.  Diagnostics go to stderr only.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import formats
from .approx import ds_approx
from .branching import SolverConfig, solve_driver
from .domset import DsInstance, ds_solve, verify_domset
from .generators import (
    gen_domset_from_setcover,
    gen_dst_from_domset,
    gen_dst_from_setcover_2deg,
    gen_dst_from_setcover_logdeg,
    gen_random_sparse,
    gen_setcover_from_psi,
    random_psi_instance,
)
from .instances import Solution, verify_dst
from .oracles import (
    OracleSizeError,
    brute_force_domset,
    brute_force_dst,
    brute_force_setcover,
)
from .stats import SolveStats, SolverTimeout

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_ORACLE_GUARD = 4
EXIT_TIMEOUT = 5


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except formats.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OracleSizeError as exc:
        print(f"oracle refused: {exc}", file=sys.stderr)
        return EXIT_ORACLE_GUARD
    except SolverTimeout:
        print("time limit exceeded", file=sys.stderr)
        return EXIT_TIMEOUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steinerdom",
        description="Exact and approximate Directed Steiner Tree and "
        "Dominating Set solvers for sparse graphs.",
    )
    sub = parser.add_subparsers(required=True)

    p_solve = sub.add_parser("solve", help="exact solver")
    p_solve.add_argument("kind", choices=["dst", "ds"])
    p_solve.add_argument("file", help="instance file, or - for stdin")
    _solver_flags(p_solve)
    p_solve.set_defaults(func=_cmd_solve)

    p_approx = sub.add_parser("approx", help="greedy dominating-set approximation")
    p_approx.add_argument("file", help="ds instance file, or - for stdin")
    p_approx.add_argument("--trace", action="store_true",
                          help="print one TRACE line per round")
    p_approx.set_defaults(func=_cmd_approx)

    p_verify = sub.add_parser("verify", help="check a solution file")
    p_verify.add_argument("kind", choices=["dst", "ds"])
    p_verify.add_argument("instance")
    p_verify.add_argument("solution")
    p_verify.set_defaults(func=_cmd_verify)

    p_oracle = sub.add_parser("oracle", help="brute-force reference solver")
    p_oracle.add_argument("kind", choices=["dst", "ds", "sc"])
    p_oracle.add_argument("file", help="instance file, or - for stdin")
    p_oracle.set_defaults(func=_cmd_oracle)

    p_bench = sub.add_parser("bench", help="CSV timing rows for instance files")
    p_bench.add_argument("files", nargs="+")
    _solver_flags(p_bench)
    p_bench.set_defaults(func=_cmd_bench)

    p_gen = sub.add_parser("gen", help="instance generators")
    gsub = p_gen.add_subparsers(required=True)

    g = gsub.add_parser("sc2dst", help="Set Cover to DST, degeneracy 2")
    g.add_argument("--in", dest="infile", default="-")
    g.set_defaults(func=_cmd_gen_sc2dst)

    g = gsub.add_parser("sc2dst-log", help="Set Cover to DST, padded bipartite core")
    g.add_argument("--in", dest="infile", default="-")
    g.add_argument("--gamma", type=float, required=True)
    g.add_argument("--c", type=float, required=True)
    g.add_argument("--cap", type=int, default=10**6, help="padding vertex cap")
    g.set_defaults(func=_cmd_gen_sc2dst_log)

    g = gsub.add_parser("sc2ds", help="Set Cover to Dominating Set (optimum + 2)")
    g.add_argument("--in", dest="infile", default="-")
    g.add_argument("--gamma", type=float, required=True)
    g.add_argument("--c", type=float, required=True)
    g.add_argument("--cap", type=int, default=10**6, help="padding vertex cap")
    g.set_defaults(func=_cmd_gen_sc2ds)

    g = gsub.add_parser("ds2dst", help="Dominating Set to DST, two layers")
    g.add_argument("--in", dest="infile", default="-")
    g.set_defaults(func=_cmd_gen_ds2dst)

    g = gsub.add_parser("psi2sc", help="random planted PSI, reduced to Set Cover")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--classes", type=int, default=3, help="pattern vertices")
    g.add_argument("--class-size", type=int, default=3, help="host vertices per color")
    g.add_argument("--edge-prob", type=float, default=0.5,
                   help="extra host edges beside the planted embedding")
    g.set_defaults(func=_cmd_gen_psi2sc)

    g = gsub.add_parser("random-dst", help="seeded sparse random DST instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--terminal-fraction", type=float, default=0.3)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--cyclic-terminals", action="store_true",
                   help="allow directed cycles among terminals")
    g.set_defaults(func=_cmd_gen_random_dst)

    g = gsub.add_parser("random-ds", help="seeded sparse random Dominating Set instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.set_defaults(func=_cmd_gen_random_ds)

    return parser


def _solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", default="auto",
                   help="auto | db | minor-free:<h> (default auto)")
    p.add_argument("--db", type=int, default=None, help="explicit degree bound")
    p.add_argument("--parallel", action="store_true",
                   help="explore sibling branches concurrently (non-deterministic)")
    p.add_argument("--stats", action="store_true",
                   help="print one machine-readable STATS line")
    p.add_argument("--time-limit", type=float, default=None, help="seconds")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _config(args) -> SolverConfig:
    mode = args.mode
    h = None
    if mode.startswith("minor-free:"):
        h = int(mode.split(":", 1)[1])
        mode = "minor-free"
    return SolverConfig(
        mode=mode,
        db=args.db,
        h=h,
        deterministic=not args.parallel,
        stats=args.stats,
        parallel=args.parallel,
        time_limit=args.time_limit,
    )


def _print_solution(sol: Solution) -> None:
    sys.stdout.write(formats.emit_solution(sol))


def _cmd_solve(args) -> int:
    cfg = _config(args)
    stats = SolveStats()
    if args.kind == "dst":
        inst = formats.parse_dst(_read(args.file))
        sol = solve_driver(inst, cfg, stats=stats)
    else:
        dinst = formats.parse_ds(_read(args.file))
        db = cfg.resolve_db(dinst.g)
        sol = ds_solve(
            dinst, db,
            stats=stats,
            deterministic=cfg.deterministic,
            parallel=cfg.parallel,
            time_limit=cfg.time_limit,
        )
    _print_solution(sol)
    if args.stats:
        print(f"STATS {stats.as_line()}")
    return EXIT_OK


def _cmd_approx(args) -> int:
    inst = formats.parse_ds(_read(args.file))
    trace = None
    if args.trace:
        trace = lambda v, key, size: print(f"TRACE {v + 1} {key} {size}")
    chosen = ds_approx(inst.g, trace=trace)
    _print_solution(Solution(vertices=chosen))
    return EXIT_OK


def _cmd_verify(args) -> int:
    sol = formats.parse_solution(_read(args.solution))
    if args.kind == "dst":
        inst = formats.parse_dst(_read(args.instance))
        ok = verify_dst(inst, sol)
        reason = "not a valid directed Steiner solution within budget"
    else:
        dinst = formats.parse_ds(_read(args.instance))
        ok = (
            sol.feasible
            and sol.size <= dinst.k
            and verify_domset(dinst.g, sol.vertices)
        )
        reason = "not a dominating set within budget"
    if ok:
        print("OK")
        return EXIT_OK
    print(f"FAIL: {reason}", file=sys.stderr)
    return EXIT_FAIL


def _cmd_oracle(args) -> int:
    text = _read(args.file)
    if args.kind == "dst":
        _print_solution(brute_force_dst(formats.parse_dst(text)))
    elif args.kind == "ds":
        _print_solution(brute_force_domset(formats.parse_ds(text)))
    else:
        cover = brute_force_setcover(formats.parse_sc(text))
        if cover is None:
            print("INFEASIBLE")
        else:
            ids = " ".join(str(i + 1) for i in cover)
            print(f"SIZE {len(cover)}")
            print(f"S {ids}" if ids else "S")
    return EXIT_OK


def _cmd_bench(args) -> int:
    cfg = _config(args)
    print("instance,n,m,k,db,mode,size,nodes,max_dw,millis")
    for path in args.files:
        text = _read(path)
        kind = _sniff_kind(text)
        stats = SolveStats()
        start = time.perf_counter()
        if kind == "dst":
            inst = formats.parse_dst(text)
            n, m, k = inst.d.n, inst.d.m, inst.k
            sol = solve_driver(inst, cfg, stats=stats)
        else:
            dinst = formats.parse_ds(text)
            n, m, k = dinst.g.n, dinst.g.m, dinst.k
            db = cfg.resolve_db(dinst.g)
            sol = ds_solve(
                dinst, db,
                stats=stats,
                deterministic=cfg.deterministic,
                parallel=cfg.parallel,
                time_limit=cfg.time_limit,
            )
        millis = int((time.perf_counter() - start) * 1000)
        size = sol.size if sol.feasible else -1
        print(
            f"{path},{n},{m},{k},{stats.db_used},{args.mode},"
            f"{size},{stats.nodes},{stats.max_dw},{millis}"
        )
    return EXIT_OK


def _sniff_kind(text: str) -> str:
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped == "c" or stripped.startswith("c "):
            continue
        parts = stripped.split()
        if len(parts) >= 2 and parts[0] == "p" and parts[1] in ("dst", "ds"):
            return parts[1]
        break
    raise formats.ParseError(1, "cannot determine instance kind from header")


def _cmd_gen_sc2dst(args) -> int:
    sc = formats.parse_sc(_read(args.infile))
    sys.stdout.write(formats.emit_dst(gen_dst_from_setcover_2deg(sc)))
    return EXIT_OK


def _cmd_gen_sc2dst_log(args) -> int:
    sc = formats.parse_sc(_read(args.infile))
    inst = gen_dst_from_setcover_logdeg(sc, args.gamma, args.c, cap=args.cap)
    sys.stdout.write(formats.emit_dst(inst))
    return EXIT_OK


def _cmd_gen_sc2ds(args) -> int:
    sc = formats.parse_sc(_read(args.infile))
    inst = gen_domset_from_setcover(sc, args.gamma, args.c, cap=args.cap)
    sys.stdout.write(formats.emit_ds(inst))
    return EXIT_OK


def _cmd_gen_ds2dst(args) -> int:
    dinst = formats.parse_ds(_read(args.infile))
    sys.stdout.write(formats.emit_dst(gen_dst_from_domset(dinst)))
    return EXIT_OK


def _cmd_gen_psi2sc(args) -> int:
    psi = random_psi_instance(
        classes=args.classes,
        class_size=args.class_size,
        extra_edge_prob=args.edge_prob,
        seed=args.seed,
    )
    sys.stdout.write(formats.emit_sc(gen_setcover_from_psi(psi)))
    return EXIT_OK


def _cmd_gen_random_dst(args) -> int:
    inst = gen_random_sparse(
        args.n, args.d, args.terminal_fraction, args.k,
        seed=args.seed, acyclic_terminals=not args.cyclic_terminals,
    )
    sys.stdout.write(formats.emit_dst(inst))
    return EXIT_OK


def _cmd_gen_random_ds(args) -> int:
    inst = gen_random_sparse(args.n, args.d, 0.0, 0, seed=args.seed)
    sys.stdout.write(formats.emit_ds(DsInstance(g=inst.d.underlying_undirected(), k=args.k)))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
