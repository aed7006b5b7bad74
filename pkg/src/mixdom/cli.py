"""``mixdom`` command line: solve, verify, gen, reduce, bench.

Exit codes: 0 success, 1 verify found an invalid solution, 2 usage or parse
error, 3 exact search ran out of budget.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .domination import (
    ForeignElementError,
    WeightConfig,
    frac_str,
    is_mixed_dominating_set,
    solution_from_json,
    solution_to_json,
    weight,
)
from .generators import generate, gnp
from .graph import GraphError, read_graph, write_graph
from .reductions import (
    ReductionError,
    build_gi,
    build_setcover_gadget,
    gi_labels_json,
    read_setcover,
    setcover_labels_json,
)
from .solvers import DEFAULT_BUDGET, BudgetExceeded, solve

BENCH_SCHEMA = "mixdom-bench v1"
BENCH_FIELDS = ["instance", "n", "m", "wv", "we", "method", "approx_weight",
                "exact_weight", "ratio"]


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _weights(args) -> WeightConfig:
    try:
        return WeightConfig(args.wv, args.we)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad weights: {exc}") from None


def _emit(obj) -> None:
    json.dump(obj, sys.stdout)
    sys.stdout.write("\n")


def cmd_solve(args) -> int:
    g = read_graph(_read_text(args.graph))
    w = _weights(args)
    try:
        res = solve(g, w, args.mode, args.budget)
    except BudgetExceeded as exc:
        inc = exc.incumbent
        _emit(solution_to_json(inc.solution, w, status="unsolved", method=None, guarantee=None))
        return 3
    out = res.to_json(w)
    out["status"] = "solved"
    _emit(out)
    return 0


def cmd_verify(args) -> int:
    g = read_graph(_read_text(args.graph))
    try:
        obj = json.loads(_read_text(args.solution))
    except json.JSONDecodeError as exc:
        raise UsageError(f"solution is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise UsageError("solution JSON must be an object")
    d = solution_from_json(obj)
    wv = args.wv if args.wv is not None else obj.get("wv", "1")
    we = args.we if args.we is not None else obj.get("we", "1")
    try:
        w = WeightConfig(wv, we)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad weights: {exc}") from None
    ok, witness = is_mixed_dominating_set(g, d)
    report = {"valid": ok, "weight": frac_str(weight(d, w).value)}
    if witness is not None:
        kind, elem = witness
        report["witness"] = {"kind": kind, "element": list(elem) if kind == "edge" else elem}
    _emit(report)
    return 0 if ok else 1


def cmd_gen(args) -> int:
    params = args.params
    try:
        n = int(params[0])
        p = float(params[1]) if len(params) > 1 else 0.5
    except (IndexError, ValueError):
        raise UsageError("gen needs <n> [p]") from None
    if args.kind == "gnp" and len(params) < 2:
        raise UsageError("gen gnp needs <n> <p>")
    g = generate(args.kind, n, p, args.seed)
    comment = [f"mixdom gen {args.kind} {' '.join(params)} seed={args.seed}"]
    sys.stdout.write(write_graph(g, comment))
    return 0


def cmd_reduce(args) -> int:
    if args.kind == "gi":
        if args.i is None:
            raise UsageError("reduce gi needs --i")
        gadget = build_gi(read_graph(_read_text(args.input)), args.i)
        labels = gi_labels_json(gadget)
        comment = [f"G_i gadget i={gadget.i}"]
    else:
        gadget = build_setcover_gadget(read_setcover(_read_text(args.input)), args.q)
        labels = setcover_labels_json(gadget)
        comment = [f"set cover gadget q={gadget.q} wv={frac_str(gadget.weights.w_v)} "
                   f"we={frac_str(gadget.weights.w_e)}"]
    text = write_graph(gadget.graph, comment)
    if args.out:
        with open(args.out + ".graph", "w") as fh:
            fh.write(text)
        with open(args.out + ".labels.json", "w") as fh:
            fh.write(labels + "\n")
    else:
        sys.stdout.write(text)
    return 0


# --- bench -------------------------------------------------------------------

def _parse_list(text: str, conv, what: str) -> list:
    try:
        return [conv(x) for x in text.split(",") if x.strip()]
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad {what}: {exc}") from None


def _parse_weight_pair(s: str) -> WeightConfig:
    wv, we = s.split(":")
    return WeightConfig(wv.strip(), we.strip())


def _bench_instance(task):
    """One random instance, every weight configuration. Runs in a worker."""
    idx, n, p, seed, weights, exact_cap, budget, timing = task
    g = gnp(n, p, np.random.Generator(np.random.PCG64([seed, idx])))
    rows = []
    for w in weights:
        t0 = time.perf_counter()
        approx = solve(g, w, "approx", budget)
        exact = None
        if n <= exact_cap:
            try:
                exact = solve(g, w, "exact", budget).weight.value
            except BudgetExceeded:
                exact = None
        elapsed = time.perf_counter() - t0
        a = approx.weight.value
        ratio: Optional[Fraction] = None
        if exact is not None:
            ratio = a / exact if exact > 0 else (Fraction(1) if a == 0 else None)
        row = {
            "instance": idx, "n": n, "m": g.m,
            "wv": frac_str(w.w_v), "we": frac_str(w.w_e),
            "method": approx.method.value,
            "approx_weight": frac_str(a),
            "exact_weight": "" if exact is None else frac_str(exact),
            "ratio": "" if ratio is None else frac_str(ratio),
        }
        if timing:
            row["wall_time"] = f"{elapsed:.6f}"
        rows.append((row, ratio, w.vertex_favorable))
    return rows


def _workers() -> int:
    env = os.environ.get("MIXDOM_THREADS")
    cap = os.cpu_count() or 1
    if env:
        try:
            return max(1, min(int(env), cap))
        except ValueError:
            raise UsageError("MIXDOM_THREADS must be an integer") from None
    return cap


def run_bench(n_range: Sequence[int], p_list, weights, trials: int, seed: int,
              exact_cap: int, budget: int = DEFAULT_BUDGET, timing: bool = False,
              workers: int = 1) -> str:
    tasks = []
    idx = 0
    for n in n_range:
        for p in p_list:
            for _ in range(trials):
                tasks.append((idx, n, p, seed, tuple(weights), exact_cap, budget, timing))
                idx += 1
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_bench_instance, tasks, chunksize=4))
    else:
        results = [_bench_instance(t) for t in tasks]

    buf = io.StringIO()
    buf.write(f"# {BENCH_SCHEMA} seed={seed}\n")
    fields = BENCH_FIELDS + (["wall_time"] if timing else [])
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    max_vf = max_all = None
    for rows in results:  # pool.map preserves instance order
        for row, ratio, vf in rows:
            writer.writerow(row)
            if ratio is not None:
                max_all = ratio if max_all is None else max(max_all, ratio)
                if vf:
                    max_vf = ratio if max_vf is None else max(max_vf, ratio)
    fmt = lambda r: "" if r is None else frac_str(r)  # noqa: E731
    buf.write(f"# max_ratio={fmt(max_all)} max_ratio_vertex_favorable={fmt(max_vf)}\n")
    return buf.getvalue()


def _parse_range(text: str) -> list[int]:
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad n-range {text!r}; use N or LO:HI") from None


def cmd_bench(args) -> int:
    p_list = _parse_list(args.p_list, float, "p-list")
    if any(not 0 <= p <= 1 for p in p_list):
        raise UsageError("probabilities must lie in [0, 1]")
    weights = _parse_list(args.weights_list, _parse_weight_pair, "weights-list")
    csv_text = run_bench(
        _parse_range(args.n_range), p_list, weights, args.trials, args.seed,
        args.exact_cap, args.budget, args.timing, _workers(),
    )
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv_text)
        sys.stdout.write(csv_text.splitlines()[-1] + "\n")
    else:
        sys.stdout.write(csv_text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mixdom", description="Weighted mixed domination toolkit")
    sub = ap.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("solve", help="solve a graph file")
    s.add_argument("graph")
    s.add_argument("--wv", default="1")
    s.add_argument("--we", default="1")
    s.add_argument("--mode", choices=["exact", "approx", "auto"], default="auto")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a solution JSON against a graph")
    v.add_argument("graph")
    v.add_argument("solution")
    v.add_argument("--wv")
    v.add_argument("--we")
    v.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="generate a graph")
    gen.add_argument("kind", choices=["gnp", "path", "cycle", "star", "complete", "tree"])
    gen.add_argument("params", nargs="+", help="<n> [p]; for star, n is the leaf count")
    gen.add_argument("--seed", type=int, default=0)
    gen.set_defaults(func=cmd_gen)

    r = sub.add_parser("reduce", help="build a reduction gadget")
    r.add_argument("kind", choices=["gi", "setcover"])
    r.add_argument("input")
    r.add_argument("--i", type=int)
    r.add_argument("--q", type=int, help="override q = floor(m ln n)")
    r.add_argument("-o", "--out", help="write OUT.graph and OUT.labels.json")
    r.set_defaults(func=cmd_reduce)

    b = sub.add_parser("bench", help="approximation ratio benchmark on G(n, p)")
    b.add_argument("--n-range", default="4:8")
    b.add_argument("--p-list", default="0.2,0.5,0.8")
    b.add_argument("--weights-list", default="1:1,1:3/2,1:2,1:3")
    b.add_argument("--trials", type=int, default=10)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--exact-cap", type=int, default=10,
                   help="largest n that also gets the exact oracle")
    b.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    b.add_argument("--timing", action="store_true",
                   help="add a wall_time column (output no longer byte-reproducible)")
    b.add_argument("-o", "--out")
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, ReductionError, ForeignElementError, ValueError) as exc:
        print(f"mixdom: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
