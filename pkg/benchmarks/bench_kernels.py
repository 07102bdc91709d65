"""Compare the compiled and pure-Python polynomial kernels.

    python3 benchmarks/bench_kernels.py [--sizes 8 12 16 24] [--repeat 3]

Times the Bareiss determinant of random relation matrices (the same cleared
input the library feeds the kernel) and a dense polynomial product.  The
second column goes through ``vknot.kernel``, so products whose coefficients
overflow int64 include the cost of the pure-Python rerun.
"""

import argparse
import statistics
import time

from vknot import _pykernel, kernel
from vknot.biquandle import relation_matrix
from vknot.diagram import random_knot
from vknot.laurent import G, S, T


def cleared_rows(m, seed):
    rows = relation_matrix(random_knot(m, seed)).entries
    shift = kernel.pack(0, 1, 1)
    return [[{k + shift: c for k, c in x._terms.items()} for x in row] for row in rows]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.mean(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 16, 24, 32])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("python", _pykernel)]
    if kernel.BACKEND != "python":
        backends.append((kernel.BACKEND, kernel))
    print(f"default backend: {kernel.BACKEND}")
    print(f"{'case':<22}" + "".join(f"{name:>14}" for name, _ in backends) + f"{'speedup':>10}")

    for m in args.sizes:
        inputs = [cleared_rows(m, seed) for seed in range(args.seeds)]
        cols = []
        for _, impl in backends:
            best, _ = best_of(lambda: [impl.det_bareiss(r) for r in inputs], args.repeat)
            cols.append(best / len(inputs))
        speed = f"{cols[0] / cols[-1]:9.1f}x" if len(cols) > 1 else ""
        print(f"{f'det m={m} ({2 * m}x{2 * m})':<22}" + "".join(f"{c * 1e3:12.2f}ms" for c in cols) + speed)

    for n in (10, 20, 40):
        p = ((1 + S + T + G) ** n)._terms
        q = ((1 - S * T + G * T) ** n)._terms
        cols = []
        for _, impl in backends:
            best, _ = best_of(lambda: impl.mul(p, q), args.repeat)
            cols.append(best)
        speed = f"{cols[0] / cols[-1]:9.1f}x" if len(cols) > 1 else ""
        label = f"mul {len(p)}x{len(q)} terms"
        print(f"{label:<22}" + "".join(f"{c * 1e3:12.2f}ms" for c in cols) + speed)


if __name__ == "__main__":
    main()
