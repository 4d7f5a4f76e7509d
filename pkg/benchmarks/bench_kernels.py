"""Compare the numba and numpy elimination kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Times a single large rank, a batch of small ranks (the exhaustive-search
workload) and a full Monte-Carlo core run on each backend.
"""
import argparse
import time

import numpy as np

from srcore import _kernels
from srcore.complex import complete_skeleton
from srcore.core import core_monte_carlo
from srcore.ring import StanleyReisnerRing

P = 2147483647


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def workloads(rng):
    dense = rng.integers(0, P, size=(400, 300))
    batch = rng.integers(0, 5, size=(100_000, 3, 4))
    ring = StanleyReisnerRing(complete_skeleton(4, 6))
    return {
        "rank 400x300 mod 2^31-1": lambda: _kernels.rank_modp(dense, P),
        "batch rank 100000 x (3x4) mod 5": lambda: _kernels.batch_rank_modp(batch, 5),
        "core monte-carlo skeleton(4,6), 10 samples": lambda: core_monte_carlo(ring, samples=10, seed=0),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    results = {}
    for name in backends:
        _kernels.set_backend(name)
        jobs = workloads(np.random.default_rng(0))
        for label, fn in jobs.items():
            fn()  # warm-up (jit compile, caches)
            results[(label, name)] = best_of(fn, args.repeat)
    print(f"{'workload':46s}" + "".join(f"{b:>10s}" for b in backends) + ("   speedup" if len(backends) == 2 else ""))
    for label in jobs:
        row = [results[(label, b)] for b in backends]
        line = f"{label:46s}" + "".join(f"{t:10.4f}" for t in row)
        if len(row) == 2:
            line += f"{row[0] / row[1]:9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
