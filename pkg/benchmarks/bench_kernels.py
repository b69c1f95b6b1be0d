#!/usr/bin/env python3
"""Benchmark the compiled bitset kernels against the pure-Python fallback.

Hosts: projective norm graphs (the densest objects the library builds) and
binomial random graphs at a few sizes.  Each kernel runs on both backends; the
table reports wall time and the speedup of the compiled path.

Usage: python3 benchmarks/bench_kernels.py [--repeat 3] [--heavy]
"""

import argparse
import random
import time

from turan3 import _kernels_py, kernels
from turan3.constructions import projective_norm_graph
from turan3.graphs import Graph


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < p])


def time_call(fn, *args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench(name, rows, n, repeat):
    import turan3._fastcore as fast

    packed = kernels.pack_rows(rows, n)
    lines = []
    for kernel in ("triangle_count", "triangle_list", "max_common_neighbors_3"):
        t_pure, r_pure = time_call(getattr(_kernels_py, kernel), rows, n, repeat=repeat)
        t_fast, r_fast = time_call(getattr(fast, kernel), packed, n, repeat=repeat)
        if kernel == "max_common_neighbors_3":
            assert r_pure[0] == r_fast[0], (name, kernel)
        else:
            assert r_pure == r_fast, (name, kernel)
        lines.append((name, n, kernel, t_pure, t_fast, t_pure / t_fast))
    return lines


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--heavy", action="store_true",
                    help="include the 294-vertex norm graph and n=400 hosts")
    args = ap.parse_args()

    if not kernels.have_fast():
        raise SystemExit("compiled kernels are not built; nothing to compare")

    rows_out = []
    pg, _ = projective_norm_graph(5, 3)
    rows_out += bench("PG(5,3)", pg.rows, pg.n, args.repeat)
    if args.heavy:
        pg7, _ = projective_norm_graph(7, 3)
        rows_out += bench("PG(7,3)", pg7.rows, pg7.n, args.repeat)
    for n, p in [(100, 0.3), (200, 0.2)] + ([(400, 0.15)] if args.heavy else []):
        g = random_graph(n, p, seed=n)
        rows_out += bench(f"G({n},{p})", g.rows, g.n, args.repeat)

    print(f"{'host':>12} {'n':>4} {'kernel':>24} {'pure[s]':>10} {'fast[s]':>10} {'speedup':>8}")
    for name, n, kernel, tp, tf, sp in rows_out:
        print(f"{name:>12} {n:>4} {kernel:>24} {tp:>10.4f} {tf:>10.4f} {sp:>7.1f}x")


if __name__ == "__main__":
    main()
