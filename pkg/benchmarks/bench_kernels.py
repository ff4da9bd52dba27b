#!/usr/bin/env python3
"""Compare the compiled determinant kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--n 100,250,500,1000] [--repeats 5]
"""

import argparse
import random
import statistics
import time
from array import array

from narydiff import _kernels_py
from narydiff.vandermonde import build_matrix

try:
    from narydiff import _kernels

    IMPLS = {"cython": _kernels, "python": _kernels_py}
except ImportError:
    print("compiled kernels not built; timing the pure-Python fallback only")
    IMPLS = {"python": _kernels_py}


def median_ms(fn, repeats):
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append((time.perf_counter() - t0) * 1000.0)
    return statistics.median(samples)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", default="100,250,500,1000")
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--bareiss-max", type=int, default=500,
                    help="skip the O(n^3) elimination above this size")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    ns = [int(t) for t in args.n.split(",")]
    header = f"{'n':>6} {'kernel':>8} {'product_ms':>12} {'bareiss_ms':>12}"
    print(header)
    print("-" * len(header))
    for n in ns:
        xs = array("d", [rng.uniform(-1.0, 1.0) for _ in range(n)])
        flat = None
        if n <= args.bareiss_max:
            flat = array("d", [v for row in build_matrix(list(xs)) for v in row])
        for name, impl in IMPLS.items():
            t_prod = median_ms(lambda: impl.det_product_f64(xs), args.repeats)
            if flat is not None:
                t_bar = f"{median_ms(lambda: impl.det_bareiss_f64(flat, n), args.repeats):12.3f}"
            else:
                t_bar = f"{'skipped':>12}"
            print(f"{n:6d} {name:>8} {t_prod:12.3f} {t_bar}")


if __name__ == "__main__":
    main()
