"""Timing comparison of the jit-compiled and interpreted kernels.

Runs each workload in two fresh subprocesses, one per kernel mode, and
prints a table with the speedup. The jit child does a warmup pass first so
compilation time never lands in a measurement.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import statistics
import subprocess
import sys
import time

WORKER = """
import json, sys, time
from mmsep._kernels import kernel_mode
from mmsep.energies import min_cut_energy
from mmsep.poincare import pi_scan
from mmsep.riesz import riesz_potential
from mmsep.spaces import gen_grid

repeat = int(sys.argv[1])
g16 = gen_grid(16)
g32 = gen_grid(32)

# Distance fields memoize per source, so the sweep workload rotates through
# pole pairs; sample i always hits two cold sources (mod 15 rows).
workloads = {
    "riesz field, 32x32 grid": lambda i: riesz_potential(
        g32, f"{1 + i % 15},0", f"{30 - i % 15},31", 2.0),
    "min cut, 16x16 grid": lambda i: min_cut_energy(g16, "0,0", "15,15", L=2.0),
    "min cut, 32x32 grid": lambda i: min_cut_energy(g32, "0,0", "31,31", L=2.0),
    "scan of 4 pole pairs, 16x16 grid": lambda i: pi_scan(
        g16, [("0,0", "15,15"), ("0,15", "15,0"), ("8,0", "8,15"),
              ("0,8", "15,8")], L=2.0, threads=1),
}

for fn in workloads.values():
    fn(-1)  # warmup: jit compile + fill the warm-path caches

out = {"mode": kernel_mode(), "timings": {}}
for name, fn in workloads.items():
    samples = []
    for i in range(repeat):
        t0 = time.perf_counter()
        fn(i)
        samples.append(time.perf_counter() - t0)
    out["timings"][name] = samples
print(json.dumps(out))
"""


def run_mode(no_numba: bool, repeat: int) -> dict:
    env = dict(os.environ, MMS_NO_NUMBA="1" if no_numba else "0")
    proc = subprocess.run([sys.executable, "-c", WORKER, str(repeat)],
                          capture_output=True, text=True, env=env)
    if proc.returncode != 0:
        sys.stderr.write(proc.stderr)
        raise SystemExit(proc.returncode)
    return json.loads(proc.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5,
                    help="samples per workload (median reported)")
    args = ap.parse_args()

    t0 = time.perf_counter()
    jit = run_mode(False, args.repeat)
    interp = run_mode(True, args.repeat)

    width = max(len(k) for k in jit["timings"])
    print(f"{'workload':<{width}}  {jit['mode']:>10}  {interp['mode']:>10}  speedup")
    for name in jit["timings"]:
        a = statistics.median(jit["timings"][name])
        b = statistics.median(interp["timings"][name])
        print(f"{name:<{width}}  {a * 1e3:>8.2f}ms  {b * 1e3:>8.2f}ms  "
              f"{b / a:>6.1f}x")
    print(f"\ntotal wall time {time.perf_counter() - t0:.1f}s "
          f"(repeat={args.repeat}, medians shown)")
    if jit["mode"] == interp["mode"]:
        print("note: numba unavailable, both columns ran interpreted")
    return 0


if __name__ == "__main__":
    sys.exit(main())
