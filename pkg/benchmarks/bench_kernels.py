#!/usr/bin/env python3
"""Benchmark the compiled sweep kernels against the pure-Python fallback.

Times `analyze_counts` throughput (the per-function work of a sweep) over
an exhaustive n=4 slice and a seeded n=5 sample, then prints functions per
second and the speedup.  Usage:

    python benchmarks/bench_kernels.py [--n4-count 8192] [--n5-count 2048]
"""

import argparse
import time

from bfforms import _kernels_py
from bfforms.truthtable import sample_uniform

try:
    from bfforms import _kernels

    BACKENDS = [_kernels_py, _kernels]
except ImportError:
    _kernels = None
    BACKENDS = [_kernels_py]


def bench(impl, n, indices):
    start = time.perf_counter()
    impl.analyze_batch(n, indices, 60.0)
    elapsed = time.perf_counter() - start
    return elapsed, len(indices) / elapsed


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n4-count", type=int, default=8192)
    parser.add_argument("--n5-count", type=int, default=2048)
    args = parser.parse_args()

    workloads = [
        (4, list(range(args.n4_count))),
        (5, sample_uniform(5, args.n5_count, seed=1)),
    ]
    for n, indices in workloads:
        print(f"n={n}, {len(indices)} functions")
        rates = {}
        for impl in BACKENDS:
            elapsed, rate = bench(impl, n, indices)
            rates[impl.BACKEND] = rate
            print(f"  {impl.BACKEND:9s} {elapsed:8.3f}s  {rate:10.0f} fn/s")
        if len(rates) == 2:
            print(f"  speedup   {rates['compiled'] / rates['pure']:8.1f}x")
        else:
            print("  (compiled backend not built; install with Cython to compare)")


if __name__ == "__main__":
    main()
