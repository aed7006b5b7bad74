"""Time the branch-and-bound kernels with numba enabled and disabled.

    python3 benchmarks/bench_kernels.py [--n 12] [--count 40]

Each backend runs in its own subprocess because MIXDOM_NUMBA is read at import.
"""
import argparse
import json
import os
import subprocess
import sys
import time

WORKER = r"""
import json, sys, time
from mixdom import WeightConfig, exact_wmd, exact_vertex_cover
from mixdom.generators import generate
from mixdom._jit import USE_NUMBA

n, count = int(sys.argv[1]), int(sys.argv[2])
graphs = [generate("gnp", n, 0.4, seed) for seed in range(count)]
exact_wmd(graphs[0], WeightConfig(1, 1))  # warm-up, includes JIT compile/cache load
exact_vertex_cover(graphs[0])
out = {"numba": USE_NUMBA}
for label, w in (("wmd 1:1", WeightConfig(1, 1)), ("wmd 1:3/2", WeightConfig(2, 3))):
    t = time.perf_counter()
    total = sum(exact_wmd(g, w).weight.value for g in graphs)
    out[label] = (time.perf_counter() - t, str(total))
t = time.perf_counter()
total = sum(len(exact_vertex_cover(g)) for g in graphs)
out["vc"] = (time.perf_counter() - t, str(total))
print(json.dumps(out))
"""


def run(flag, n, count):
    env = dict(os.environ, MIXDOM_NUMBA=flag)
    t = time.perf_counter()
    proc = subprocess.run([sys.executable, "-c", WORKER, str(n), str(count)],
                          env=env, capture_output=True, text=True, check=True)
    res = json.loads(proc.stdout)
    res["process"] = time.perf_counter() - t
    return res


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--count", type=int, default=40)
    args = ap.parse_args()
    jit, pure = run("1", args.n, args.count), run("0", args.n, args.count)
    if not jit["numba"]:
        print("numba unavailable; both runs used the pure-Python kernels")
    print(f"G(n={args.n}, p=0.4) x {args.count}")
    print(f"{'kernel':<12}{'numba s':>10}{'python s':>10}{'speedup':>9}")
    for key in ("wmd 1:1", "wmd 1:3/2", "vc"):
        (tj, vj), (tp, vp) = jit[key], pure[key]
        assert vj == vp, f"backends disagree on {key}: {vj} vs {vp}"
        print(f"{key:<12}{tj:>10.3f}{tp:>10.3f}{tp / tj:>8.1f}x")
    print(f"{'process':<12}{jit['process']:>10.3f}{pure['process']:>10.3f}")


if __name__ == "__main__":
    main()
