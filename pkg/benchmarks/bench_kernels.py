"""Compare the compiled predicate kernel against the pure-Python fallback.

Runs the full solve pipeline over a fixed instance set twice, once per
kernel, in subprocesses (the kernel is chosen at import time).  Reports
wall-clock totals and the speedup ratio.

Usage: python3 benchmarks/bench_kernels.py [--sizes 8,16,24] [--reps 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

_WORKER = r"""
import json, sys, time
from reflectpath.kernel import backend_name
from reflectpath.generators import gen_spiral, gen_random_simple
from reflectpath.paths import solve_instance

sizes = json.loads(sys.argv[1])
reps = int(sys.argv[2])
insts = []
for n in sizes:
    insts.append(gen_spiral(n if n % 2 == 0 else n + 1))
    for rep in range(reps):
        for retry in range(40):
            try:
                insts.append(gen_random_simple(n, seed=1000 * rep + retry))
                break
            except Exception:
                continue
t0 = time.perf_counter()
ks = [solve_instance(inst).k for inst in insts]
dt = time.perf_counter() - t0
print(json.dumps({"backend": backend_name(), "seconds": dt,
                  "instances": len(insts), "ks": ks}))
"""


def run_side(pure: bool, sizes: list[int], reps: int) -> dict:
    env = dict(os.environ)
    if pure:
        env["REFLECTPATH_PURE_KERNEL"] = "1"
    else:
        env.pop("REFLECTPATH_PURE_KERNEL", None)
    out = subprocess.run(
        [sys.executable, "-c", _WORKER, json.dumps(sizes), str(reps)],
        capture_output=True, text=True, env=env, check=True,
    )
    return json.loads(out.stdout)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="8,16,24")
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(x) for x in args.sizes.split(",")]

    compiled = run_side(pure=False, sizes=sizes, reps=args.reps)
    fallback = run_side(pure=True, sizes=sizes, reps=args.reps)
    if compiled["ks"] != fallback["ks"]:
        print("kernel disagreement on solve results!", file=sys.stderr)
        return 1
    print(f"instances       : {compiled['instances']}")
    print(f"{compiled['backend']:<16}: {compiled['seconds']:.3f}s")
    print(f"{fallback['backend']:<16}: {fallback['seconds']:.3f}s")
    if compiled["seconds"] > 0:
        print(f"speedup         : {fallback['seconds'] / compiled['seconds']:.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
