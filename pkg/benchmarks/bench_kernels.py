"""Compare the compiled and numpy geometry kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times each kernel on canonical loops of 1, 8 and 64 turns (32 vertices per
turn) plus one end-to-end workload: a winding sweep with 2000 trials.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from acsim import _backend
from acsim.geometry import circle_path

SIZES = (1, 8, 64)


def bench_kernels(name, repeat):
    k = _backend.load(name)
    rows = []
    for turns in SIZES:
        p = circle_path((0.0, 0.0), 1.0, turns)
        xs, ys = p.xs, p.ys
        calls = {
            "crossing_winding": lambda: k.crossing_winding(xs, ys, 0.1, 0.2),
            "angle_sum": lambda: k.angle_sum(xs, ys, 0.1, 0.2),
            "min_distance": lambda: k.min_distance(xs, ys, 0.1, 0.2),
            "shoelace": lambda: k.shoelace(xs, ys),
        }
        for kernel, fn in calls.items():
            number = 200
            best = min(timeit.repeat(fn, number=number, repeat=repeat)) / number
            rows.append((kernel, len(xs), best))
    return rows


def bench_sweep(name):
    code = (
        "import time; from acsim.experiments import sweep_winding; t=time.perf_counter();"
        "sweep_winding([1, 2, 4, 8], 0.1, 500, 1); print(time.perf_counter()-t)"
    )
    env = dict(os.environ, ACSIM_PURE_PYTHON="1" if name == "python" else "0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = _backend.available()
    results = {b: bench_kernels(b, args.repeat) for b in backends}
    print(f"{'kernel':<18}{'vertices':>9}" + "".join(f"{b + ' (us)':>16}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    for i, (kernel, nv, _) in enumerate(results[backends[0]]):
        times = [results[b][i][2] for b in backends]
        line = f"{kernel:<18}{nv:>9}" + "".join(f"{t * 1e6:>16.2f}" for t in times)
        if len(times) > 1:
            line += f"{times[1] / times[0]:>9.1f}x"
        print(line)
    print()
    for b in backends:
        print(f"sweep_winding(n=1,2,4,8, 500 trials) [{b}]: {bench_sweep(b):.2f} s")


if __name__ == "__main__":
    np.seterr(all="ignore")
    main()
