"""Compare the compiled triangle/pattern kernels with the pure fallback.

Runs each kernel on random graphs and on the extremal constructions and
prints per-call timings for both backends.  Usage:

    python3 bench/benchmark_kernels.py [--sizes 16,64,256] [--reps 200]
"""

from __future__ import annotations

import argparse
import random
import time

from blowup import _pykernels, families
from blowup.graph import Graph

try:
    from blowup import _ckernels
except ImportError:
    _ckernels = None


def random_rows(n: int, density: float, rng) -> list:
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                g.add_edge(u, v)
    return g.adj


KERNELS = (
    "triangle_total",
    "triangle_per_vertex",
    "c33_witness",
    "p33_witness",
)


def bench_one(mod, name, rows, n, reps):
    fn = getattr(mod, name)
    t0 = time.perf_counter()
    for _ in range(reps):
        fn(rows, n)
    return (time.perf_counter() - t0) / reps


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="16,64,256")
    ap.add_argument("--reps", type=int, default=200)
    ap.add_argument("--density", type=float, default=0.4)
    args = ap.parse_args()

    if _ckernels is None:
        print("compiled backend unavailable; benchmarking pure only")
    rng = random.Random(0)
    sizes = [int(s) for s in args.sizes.split(",")]
    cases = [("random", n, random_rows(n, args.density, rng)) for n in sizes]
    for n in sizes:
        if n >= 8 and n % 2 == 0:
            g = families.thm2_extremal(n)
            cases.append(("thm2", n, g.adj))

    header = f"{'case':>8} {'n':>4} {'kernel':>20} {'pure':>12}"
    if _ckernels is not None:
        header += f" {'compiled':>12} {'speedup':>8}"
    print(header)
    for label, n, rows in cases:
        for name in KERNELS:
            pure = bench_one(_pykernels, name, rows, n, args.reps)
            line = f"{label:>8} {n:>4} {name:>20} {pure * 1e6:>10.1f}us"
            if _ckernels is not None:
                comp = bench_one(_ckernels, name, rows, n, args.reps)
                line += f" {comp * 1e6:>10.1f}us {pure / comp:>7.1f}x"
            print(line)


if __name__ == "__main__":
    main()
