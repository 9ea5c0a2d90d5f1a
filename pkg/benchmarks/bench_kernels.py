"""Benchmark: compiled kernels versus the pure-Python twins.

Runs the three hot loops on identical inputs with both implementations and
prints timings.  The compiled module is imported directly (not through the
_speedups selector) so both sides are always measured, whatever
TORUSCERT_PURE_PYTHON says.

Usage: python benchmarks/bench_kernels.py
"""

import random
import time
from math import gcd

from toruscert import _kernels_py

try:
    from toruscert import _kernels
except ImportError:
    _kernels = None


def canonical_pairs(rng, count, bound):
    out = []
    while len(out) < count:
        p, q = rng.randint(-bound, bound), rng.randint(0, bound)
        if (p, q) == (0, 0):
            continue
        g = gcd(abs(p), q)
        p, q = p // g, q // g
        if q == 0:
            p = 1
        out.append((p, q))
    return out


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def bench_distance(mod, pairs):
    def run():
        total = 0
        for (p1, q1), (p2, q2) in pairs:
            total += mod.farey_distance(p1, q1, p2, q2)
        return total

    return timed(run)


def bench_fixed_scan(mod, matrices, bound):
    def run():
        total = 0
        for a, b, c, d in matrices:
            total += len(mod.fixed_slope_scan(a, b, c, d, bound))
        return total

    return timed(run)


def bench_displacement(mod, matrices, bound):
    def run():
        total = 0
        for a, b, c, d in matrices:
            best, _, _ = mod.min_displacement_scan(a, b, c, d, bound, 0)
            total += best
        return total

    return timed(run)


def main():
    rng = random.Random(2024)
    slopes = canonical_pairs(rng, 40_000, 500)
    pairs = list(zip(slopes[::2], slopes[1::2]))
    matrices = []
    while len(matrices) < 30:
        a, b, c, d = (rng.randint(-40, 40) for _ in range(4))
        if a * d - b * c != 0:
            matrices.append((a, b, c, d))

    rows = []
    for name, fn, args in (
        ("farey_distance x20k", bench_distance, (pairs,)),
        ("fixed_slope_scan bound=200 x30", bench_fixed_scan, (matrices, 200)),
        ("min_displacement_scan bound=60 x30", bench_displacement, (matrices, 60)),
    ):
        py_result, py_time = fn(_kernels_py, *args)
        if _kernels is None:
            rows.append((name, py_time, None, py_result, None))
            continue
        cy_result, cy_time = fn(_kernels, *args)
        assert cy_result == py_result, f"{name}: implementations disagree"
        rows.append((name, py_time, cy_time, py_result, cy_result))

    print(f"{'kernel':<38} {'pure (s)':>10} {'cython (s)':>11} {'speedup':>8}")
    for name, py_time, cy_time, _, _ in rows:
        if cy_time is None:
            print(f"{name:<38} {py_time:>10.3f} {'absent':>11} {'-':>8}")
        else:
            print(
                f"{name:<38} {py_time:>10.3f} {cy_time:>11.3f} "
                f"{py_time / cy_time:>7.1f}x"
            )
    if _kernels is None:
        print("\ncompiled kernels not built; install with Cython for the comparison")
    else:
        print("\nresults agreed on every input")


if __name__ == "__main__":
    main()
