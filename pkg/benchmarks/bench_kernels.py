"""Time each hot kernel compiled and as plain Python on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]

The compiled column runs in this process after an untimed warm-up call. The
Python column runs in a child process started with PQX_DISABLE_NUMBA=1, so
kernels that call other kernels are uncompiled all the way down.
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from pqextremal import Hypergraph, _kernels
from pqextremal._accel import HAS_NUMBA
from pqextremal.kneser import KneserSpec, build_kneser


def cases():
    K6 = Hypergraph.complete(6, 2)
    K7 = Hypergraph.complete(7, 2)
    K5 = Hypergraph.complete(5, 2)
    kn = build_kneser(KneserSpec(6, 2, 2, 2))
    ptr, idx = kn.incidence
    empty = np.empty(0, np.int64)
    yield ("family_dfs count, K7 edges, (4,3)", _kernels.family_dfs,
           (K7.mask_array, K7.vertex_array, 4, 2, empty, 0, np.empty((0, 4), np.int64)))
    yield ("branch_and_bound, n=6 k=2 (4,3)", _kernels.branch_and_bound,
           (K6.mask_array, K6.vertex_array, 4, 2, np.empty(0, np.int8), 0, 0))
    yield ("branch_and_bound, n=7 k=2 (5,3)", _kernels.branch_and_bound,
           (K7.mask_array, K7.vertex_array, 5, 2, np.empty(0, np.int8), 0, 0))
    yield ("power_set_maximum, n=5 k=2 (3,3)", _kernels.power_set_maximum,
           (K5.mask_array, K5.vertex_array, 3, 2))
    yield ("unicyclic_degree_scan, n=5", _kernels.unicyclic_degree_scan, (5,))
    yield ("max_independent_set, Kneser(6,2)", _kernels.max_independent_set,
           (kn.n, kn.mask_array, ptr, idx, 0))
    yield ("color_search 4 colours, Kneser(6,2)", _kernels.color_search,
           (kn.n, kn.mask_array, ptr, idx, 4, 0))


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def measure(repeat):
    out = {}
    for name, kernel, kargs in cases():
        kernel(*kargs)  # warm-up, and compilation when numba is active
        out[name] = best_of(kernel, kargs, repeat)
    return out


def measure_python(repeat):
    env = dict(os.environ, PQX_DISABLE_NUMBA="1")
    cmd = [sys.executable, __file__, "--repeat", str(repeat), "--measure-only"]
    done = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(done.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--measure-only", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)

    if args.measure_only:
        print(json.dumps(measure(args.repeat)))
        return

    fast = measure(args.repeat)
    slow = measure_python(args.repeat)
    rows = [
        {"kernel": name, "compiled_s": fast[name], "python_s": slow[name],
         "speedup": slow[name] / fast[name] if fast[name] else None}
        for name in fast
    ]

    if args.json:
        print(json.dumps({"numba": HAS_NUMBA, "repeat": args.repeat, "rows": rows}, indent=1))
        return
    print(f"numba active: {HAS_NUMBA}")
    width = max(len(r["kernel"]) for r in rows)
    print(f"{'kernel'.ljust(width)}  {'compiled':>10}  {'python':>10}  {'speedup':>8}")
    for r in rows:
        print(f"{r['kernel'].ljust(width)}  {r['compiled_s']:10.5f}  {r['python_s']:10.5f}  {r['speedup']:8.1f}x")


if __name__ == "__main__":
    main()
