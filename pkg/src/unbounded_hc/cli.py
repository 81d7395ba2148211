"""Command line entry point: solve, generate, convert, verify, bench."""
from __future__ import annotations

import argparse
import hashlib
import json
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .errors import BudgetExceeded, GraphFormatError, NotConnectedError, SearchStuck
from .exact import solve_exact
from .generators import gen_generalized_petersen, gen_random_connected, gen_random_tree
from .graph import Graph, cut_vertices
from .heuristic import HeuristicConfig, solve_heuristic
from .io import emit_edge_list, emit_walk, parse_id_list, parse_walk, read_graph
from .reductions import emit_tsplib_atsp, to_atsp_instance, to_hcp_instance
from .trees import tree_cycle, tree_path
from .walks import verify_walk

SCHEMA = 1
EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _load_graph(path: str, fmt: str) -> tuple[Graph, str]:
    text = _read_text(path)
    try:
        graph = read_graph(text, fmt)
    except (GraphFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    return graph, hashlib.sha256(text.encode()).hexdigest()


def _parse_ub(text: str | None, n: int) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        ub = parse_id_list(text)
    except GraphFormatError as exc:
        raise InputError(str(exc)) from exc
    bad = sorted(v for v in ub if not 0 <= v < n)
    if bad:
        raise InputError(f"unbounded vertex out of range: {bad}")
    return ub


def _write(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_record(record: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(record, sort_keys=True))
        return
    res = record.get("result", {})
    for key in ("algo", "n", "m", "k", "walk_length", "unbounded"):
        if key in res:
            print(f"{key}: {res[key]}")
    if "wall_time_ms" in record:
        print(f"time_ms: {record['wall_time_ms']:.1f}")


# -- solve -----------------------------------------------------------------

def run_solver(graph: Graph, algo: str, budget: float | None = None,
               config: HeuristicConfig | None = None) -> dict:
    """Run one solver and return the verified result fields plus counters."""
    if algo == "exact":
        res = solve_exact(graph, budget=budget)
        walk, ub = res.walk, res.unbounded
        counters = {"subsets_tried": res.subsets_tried, "checks_run": res.checks_run}
    elif algo in ("heuristic", "fast"):
        mode = "full" if algo == "heuristic" else "fast"
        rep = solve_heuristic(graph, mode, config)
        walk, ub = rep.walk, rep.unbounded
        counters = {"reroutes": rep.reroutes, "states_expanded": rep.states_expanded,
                    "rotations": rep.rotations, "extensions": rep.extensions}
    elif algo in ("tree-cycle", "tree-path"):
        walk, ub = (tree_cycle if algo == "tree-cycle" else tree_path)(graph)
        counters = {}
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    kind = "path" if algo == "tree-path" else "cycle"
    report = verify_walk(graph, walk, kind, claimed=ub)
    if not report.valid:
        raise SearchStuck(f"{algo} produced an invalid walk ({report.failure})")
    result = {"algo": algo, "n": graph.n, "kind": kind, "k": len(ub),
              "walk_length": len(walk), "unbounded": sorted(ub), "walk": list(walk)}
    if algo == "exact":
        result["m"] = len(ub)
    return {"result": result, "counters": counters}


def cmd_solve(args) -> int:
    graph, digest = _load_graph(args.input, args.format)
    config = HeuristicConfig(cap_factor=args.cap_factor, state_factor=args.state_factor)
    t0 = time.perf_counter()
    try:
        out = run_solver(graph, args.algo, args.budget, config)
    except (BudgetExceeded, SearchStuck) as exc:
        record = {"schema": SCHEMA, "command": "solve", "error": str(exc)}
        if isinstance(exc, BudgetExceeded):
            record["lower_bound"] = exc.lower_bound
        _emit_record(record, True)
        return EXIT_BUDGET
    except (NotConnectedError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    record = {
        "schema": SCHEMA,
        "command": "solve",
        "argv": sys.argv[1:],
        "input_digest": digest,
        "seed": None,
        "mode": args.algo,
        **out,
        "wall_time_ms": (time.perf_counter() - t0) * 1000,
    }
    if args.walk_out:
        kind_ub = record["result"]["unbounded"]
        Path(args.walk_out).write_text(emit_walk(record["result"]["walk"], kind_ub) + "\n")
    _emit_record(record, args.json)
    return EXIT_OK


# -- generate --------------------------------------------------------------

def cmd_generate(args) -> int:
    try:
        if args.kind == "random":
            if args.avg is None:
                raise InputError("--avg is required for random graphs")
            graph = gen_random_connected(args.n, Fraction(args.avg), args.seed)
        elif args.kind == "petersen":
            if args.k is None:
                raise InputError("--k is required for petersen graphs")
            graph = gen_generalized_petersen(args.n, args.k)
        else:
            graph = gen_random_tree(args.n, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _write(emit_edge_list(graph), args.output)
    return EXIT_OK


# -- convert ---------------------------------------------------------------

def cmd_convert(args) -> int:
    graph, _ = _load_graph(args.input, args.format)
    ub = _parse_ub(args.ub, graph.n)
    if args.to == "hcp":
        inst = to_hcp_instance(graph, ub)
        text, sidecar = emit_edge_list(inst.graph), inst.to_json()
    else:
        if ub:
            raise InputError("--ub does not apply to the ATSP construction")
        try:
            inst = to_atsp_instance(graph)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        text, sidecar = emit_tsplib_atsp(inst), inst.to_json()
    _write(text, args.output)
    map_path = args.map or (args.output + ".json" if args.output and args.output != "-" else None)
    if map_path:
        Path(map_path).write_text(sidecar + "\n")
    return EXIT_OK


# -- verify ----------------------------------------------------------------

def cmd_verify(args) -> int:
    graph, _ = _load_graph(args.graph, args.format)
    try:
        walk, header_ub = parse_walk(_read_text(args.walk))
    except GraphFormatError as exc:
        raise InputError(f"{args.walk}: {exc}") from exc
    claimed = _parse_ub(args.ub, graph.n) if args.ub is not None else header_ub
    report = verify_walk(graph, walk, args.kind, claimed=claimed)
    print(json.dumps({"schema": SCHEMA, "command": "verify", **report.to_dict()}, sort_keys=True))
    return EXIT_OK if report.valid else EXIT_INPUT


# -- bench -----------------------------------------------------------------

def _bench_trial(task) -> dict:
    n, avg, seed, algos, budget = task
    graph = gen_random_connected(n, Fraction(avg), seed)
    row = {"avg": avg, "seed": seed, "cut_vertices": len(cut_vertices(graph))}
    for algo in algos:
        t0 = time.perf_counter()
        res = run_solver(graph, algo, budget)["result"]
        row[algo] = {"k": res["k"], "walk_length": res["walk_length"],
                     "time_ms": (time.perf_counter() - t0) * 1000}
    return row


def bench_rows(n: int, avgs, trials: int, seed: int, algos, workers: int = 1,
               budget: float | None = None) -> list[dict]:
    """Mean statistics per average degree over ``trials`` seeded graphs."""
    tasks = [(n, avg, seed + t, tuple(algos), budget) for avg in avgs for t in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            trials_out = list(pool.map(_bench_trial, tasks, chunksize=8))
    else:
        trials_out = [_bench_trial(t) for t in tasks]
    rows = []
    for avg in avgs:
        mine = [r for r in trials_out if r["avg"] == avg]
        row = {"n": n, "avg": avg, "trials": len(mine),
               "cut_vertices": statistics.fmean(r["cut_vertices"] for r in mine)}
        for algo in algos:
            row[algo] = {
                "unbounded": statistics.fmean(r[algo]["k"] for r in mine),
                "walk_length": statistics.fmean(r[algo]["walk_length"] for r in mine),
                "time_ms": statistics.fmean(r[algo]["time_ms"] for r in mine),
            }
            if "exact" in algos and algo != "exact":
                row[algo]["difference"] = statistics.fmean(
                    r[algo]["k"] - r["exact"]["k"] for r in mine)
        rows.append(row)
    return rows


def cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in ("exact", "heuristic", "fast"):
            raise InputError(f"unknown algorithm {a!r}")
    try:
        avgs = [str(Fraction(a.strip())) if "/" in a else a.strip() for a in args.avg.split(",")]
        for a in avgs:
            Fraction(a)
    except ValueError as exc:
        raise InputError(f"bad --avg list: {exc}") from exc
    try:
        rows = bench_rows(args.n, avgs, args.trials, args.seed, algos, args.workers, args.budget)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    except (BudgetExceeded, SearchStuck) as exc:
        print(json.dumps({"schema": SCHEMA, "command": "bench", "error": str(exc)}))
        return EXIT_BUDGET
    for row in rows:
        if args.json:
            print(json.dumps({"schema": SCHEMA, "command": "bench", **row}, sort_keys=True))
        else:
            cols = [f"avg={row['avg']}", f"cut={row['cut_vertices']:.3f}"]
            for algo in algos:
                cell = row[algo]
                text = f"{algo}={cell['unbounded']:.3f}"
                if "difference" in cell:
                    text += f" (+{cell['difference']:.3f})"
                cols.append(text)
            print("  ".join(cols))
    return EXIT_OK


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unbounded-hc",
                                description="Minimum-repeat closed walks covering a graph.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_format(sp):
        sp.add_argument("--format", choices=["auto", "tsplib", "edgelist"], default="auto")

    s = sub.add_parser("solve", help="solve one graph")
    s.add_argument("input")
    s.add_argument("--algo", default="heuristic",
                   choices=["exact", "heuristic", "fast", "tree-cycle", "tree-path"])
    graph_format(s)
    s.add_argument("--budget", type=float, default=None, help="seconds, exact solver only")
    s.add_argument("--cap-factor", type=int, default=10)
    s.add_argument("--state-factor", type=int, default=50)
    s.add_argument("--walk-out", default=None, help="also write the walk to this file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("generate", help="write a generated graph as an edge list")
    g.add_argument("--kind", choices=["random", "petersen", "tree"], required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, default=None)
    g.add_argument("--avg", default=None, help="average degree, e.g. 3 or 5/2")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", default=None)
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("convert", help="build the HCP or ATSP construction")
    c.add_argument("input")
    c.add_argument("--to", choices=["hcp", "atsp"], required=True)
    c.add_argument("--ub", default=None, help="comma separated unbounded vertices")
    graph_format(c)
    c.add_argument("-o", "--output", default=None)
    c.add_argument("--map", default=None, help="label/node map JSON path")
    c.set_defaults(func=cmd_convert)

    v = sub.add_parser("verify", help="check a walk file against a graph")
    v.add_argument("graph")
    v.add_argument("walk")
    v.add_argument("--kind", choices=["path", "cycle"], default="cycle")
    v.add_argument("--ub", default=None)
    graph_format(v)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="random-graph sweep")
    b.add_argument("--n", type=int, default=20)
    b.add_argument("--avg", default="2,3,4,5,6")
    b.add_argument("--trials", type=int, default=100)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--algos", default="exact,heuristic,fast")
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--budget", type=float, default=None)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
