"""Benchmark the compiled counting kernels against the pure-Python twins.

Runs each kernel on a fixed workload with both backends, checks they agree
exactly, and prints best-of-N timings with the speedup.  Usage:

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from charrank import _kernels_py

try:
    from charrank import _kernels_c
except ImportError:
    _kernels_c = None

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# (label, kernel name, args) — workloads sized to stay inside the
# compiled fast path (weight <= 416) except the last, which exercises the
# shared big-integer route on both backends.
WORKLOADS = (
    ("box_count(20, 20, 200)", "box_count", (20, 20, 200)),
    ("box_count(12, 12, 72)", "box_count", (12, 12, 72)),
    ("box_table(18, 18)", "box_table", (18, 18)),
    ("set_exact_counts(primes<50, 40, 400)", "set_exact_counts", (PRIMES, 40, 400)),
    ("partition_table(416)", "partition_table", (416,)),
    ("partition_table(700)  [big-int path]", "partition_table", (700,)),
)


def best_of(fn, args, repeat):
    best = float("inf")
    value = None
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, value


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5, help="runs per timing (default 5)")
    args = parser.parse_args()

    if _kernels_c is None:
        print("compiled backend not available; nothing to compare")
        return

    width = max(len(label) for label, _, _ in WORKLOADS)
    print(f"{'workload':<{width}}  {'python':>10}  {'cython':>10}  speedup")
    for label, name, call_args in WORKLOADS:
        py_time, py_value = best_of(getattr(_kernels_py, name), call_args, args.repeat)
        c_time, c_value = best_of(getattr(_kernels_c, name), call_args, args.repeat)
        if py_value != c_value:
            raise SystemExit(f"backend disagreement on {label}: results differ")
        print(
            f"{label:<{width}}  {py_time * 1e3:>8.2f}ms  {c_time * 1e3:>8.2f}ms  "
            f"{py_time / c_time:>6.1f}x"
        )


if __name__ == "__main__":
    main()
