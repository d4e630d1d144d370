"""Timing comparison of the compiled search kernel vs the pure-Python one.

Both kernels implement the same two routines (single-pair evaluation and
the search inner loop); this script times them head to head and checks
the outputs agree along the way.

Usage: python benchmarks/bench_kernels.py [--bound 2000] [--repeat 3]
"""

import argparse
import math
import time

from dedsum import _kernel_py

try:
    from dedsum import _kernel
except ImportError:
    _kernel = None


def best_of(repeat, fn, *args):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_eval(kernel, pairs, repeat):
    def run():
        out = 0
        for a, b in pairs:
            num, den = kernel.normalized_sum_parts(a, b)
            out ^= num ^ den
        return out

    return best_of(repeat, run)


def bench_scan(kernel, bound, prune, repeat):
    return best_of(repeat, kernel.scan_slice, 18, 7, 2, bound, prune)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=2000,
                        help="exclusive denominator bound for the scan (default 2000)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="take the best of this many runs (default 3)")
    args = parser.parse_args()

    pairs = [(a, b) for b in range(2, 500)
             for a in range(1, b) if math.gcd(a, b) == 1]

    print(f"single-pair evaluation over {len(pairs)} coprime pairs, b < 500")
    t_pure, x_pure = bench_eval(_kernel_py, pairs, args.repeat)
    print(f"  pure     {t_pure * 1e3:9.2f} ms")
    if _kernel is not None:
        t_c, x_c = bench_eval(_kernel, pairs, args.repeat)
        assert x_c == x_pure
        print(f"  compiled {t_c * 1e3:9.2f} ms   ({t_pure / t_c:6.1f}x faster)")

    for prune in (True, False):
        label = "pruned" if prune else "full"
        print(f"scan for 18/7 with b < {args.bound} ({label})")
        t_pure, r_pure = bench_scan(_kernel_py, args.bound, prune, args.repeat)
        print(f"  pure     {t_pure * 1e3:9.2f} ms   "
              f"({r_pure[1]} pairs scanned, {len(r_pure[0])} hits)")
        if _kernel is not None:
            t_c, r_c = bench_scan(_kernel, args.bound, prune, args.repeat)
            assert r_c == r_pure
            print(f"  compiled {t_c * 1e3:9.2f} ms   ({t_pure / t_c:6.1f}x faster)")

    if _kernel is None:
        print("compiled kernel not built; only the pure path was timed")


if __name__ == "__main__":
    main()
