"""Benchmark the coloring-search kernels: numba backend vs pure numpy.

Measures the exhaustive scan and the local-descent replay on a few base
sets.  The numba path pays a one-time JIT compile (cached afterwards);
timings below exclude it via a warmup call.

Run:  python3 benchmarks/bench_search.py [--repeats 3] [--large]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from equilines.bounds import bound_value, theorem_info
from equilines.bounds import BoundTheorem
from equilines.generators import grid, random_rational
from equilines.geometry import enumerate_lines
from equilines.kernels import (
    HAVE_NUMBA,
    build_incidence,
    descent_replay,
    exhaustive_scan,
    selection_table,
)


def prepare(points, k, theorem):
    total = len(points)
    n_green = (total + k) // 2
    lines = enumerate_lines(points)
    incidence = build_incidence(lines, total)
    info = theorem_info(theorem)
    t = incidence.n_lines if info.needs_total_lines else None
    bound = bound_value(theorem, n_green, k, t)
    sel = selection_table(incidence.line_sizes, info.query.r, info.query.max_points)
    return incidence, sel, n_green, bound


def time_call(fn, repeats):
    best = math.inf
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_exhaustive(name, points, k, theorem, repeats):
    incidence, sel, n_green, bound = prepare(points, k, theorem)
    colorings = math.comb(len(points), n_green)
    print(f"\nexhaustive {name}: {colorings} colorings, {incidence.n_lines} lines")
    results = {}
    for backend in ("numba", "numpy"):
        if backend == "numba" and not HAVE_NUMBA:
            print("  numba unavailable, skipping")
            continue

        def run(b=backend):
            return exhaustive_scan(
                incidence, sel, n_green, bound.numerator, bound.denominator, backend=b
            )

        run()  # warmup (JIT compile / allocation)
        elapsed, result = time_call(run, repeats)
        results[backend] = result
        rate = colorings / elapsed if elapsed > 0 else math.inf
        print(
            f"  {backend:>6}: {elapsed * 1e3:9.2f} ms  "
            f"({rate:,.0f} colorings/s)  best_actual={result[0]}"
        )
    if len(results) == 2:
        assert results["numba"][0] == results["numpy"][0]
        assert (results["numba"][1] == results["numpy"][1]).all()
        print("  backends agree")


def bench_descent(name, points, k, theorem, budget, repeats):
    incidence, sel, n_green, bound = prepare(points, k, theorem)
    rng = np.random.Generator(np.random.PCG64(0))
    initial = np.sort(rng.permutation(len(points))[:n_green]).astype(np.int64)
    moves_g = rng.integers(0, n_green, size=budget, dtype=np.int64)
    moves_r = rng.integers(0, len(points) - n_green, size=budget, dtype=np.int64)
    print(f"\nlocal descent {name}: {budget} moves, {incidence.n_lines} lines")
    results = {}
    for backend in ("numba", "numpy"):
        if backend == "numba" and not HAVE_NUMBA:
            print("  numba unavailable, skipping")
            continue

        def run(b=backend):
            return descent_replay(
                incidence,
                sel,
                initial,
                moves_g,
                moves_r,
                bound.numerator,
                bound.denominator,
                backend=b,
            )

        run()  # warmup
        elapsed, result = time_call(run, repeats)
        results[backend] = result
        rate = budget / elapsed if elapsed > 0 else math.inf
        print(
            f"  {backend:>6}: {elapsed * 1e3:9.2f} ms  "
            f"({rate:,.0f} moves/s)  best_actual={result[0]}"
        )
    if len(results) == 2:
        assert results["numba"][0] == results["numpy"][0]
        print("  backends agree")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument(
        "--large",
        action="store_true",
        help="also run a 5x5 grid (5.2M colorings; slow on the numpy path)",
    )
    args = parser.parse_args()

    bench_exhaustive("grid(4), k=0, equisix", grid(4), 0, BoundTheorem.EQUI_SIX, args.repeats)
    bench_exhaustive(
        "random_rational(18,1,9), k=0, equifour",
        random_rational(18, 1, 9),
        0,
        BoundTheorem.EQUI_FOUR,
        args.repeats,
    )
    if args.large:
        bench_exhaustive(
            "grid(5), k=1, equisix", grid(5), 1, BoundTheorem.EQUI_SIX, args.repeats
        )
    bench_descent(
        "grid(5), k=1, equisix", grid(5), 1, BoundTheorem.EQUI_SIX, 200_000, args.repeats
    )


if __name__ == "__main__":
    main()
