#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot searches (nested-complexity subset DP, maximum clique,
chromatic number) on the same inputs through both backends and prints the
speedups.  Outputs are asserted equal along the way, so this doubles as a
coarse equivalence check on larger instances than the unit tests use.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time
from fractions import Fraction

from nclgraph import gen_marking_graph, gen_random
from nclgraph._kernels import pure

try:
    from nclgraph._kernels import _speedups as compiled
except ImportError:
    compiled = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return result, best


def bench(name, fn_name, masks, repeat=3):
    pure_result, pure_time = timed(getattr(pure, fn_name), masks, repeat=repeat)
    row = f"{name:<38} pure {pure_time * 1000:9.2f} ms"
    if compiled is not None:
        fast_result, fast_time = timed(getattr(compiled, fn_name), masks, repeat=repeat)
        assert fast_result == pure_result, f"backend mismatch in {name}"
        row += f"   compiled {fast_time * 1000:9.2f} ms   speedup {pure_time / fast_time:6.1f}x"
    print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller instances")
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernels not available; timing the pure backend only\n")

    ncl_n = 14 if args.quick else 17
    clique_n = 40 if args.quick else 56
    chrom_n = 16 if args.quick else 20

    dense = gen_random(ncl_n, Fraction(1, 2), 11)
    marking = gen_marking_graph(0, ncl_n // 2 + 3, "all")  # 2*(n/2) vertices
    clique_graph = gen_random(clique_n, Fraction(3, 4), 12)
    chrom_graph = gen_random(chrom_n, Fraction(1, 2), 13)

    print(f"nested complexity subset DP, n={dense.vertex_count} (random p=1/2)")
    bench("  ncl_subset_table / random", "ncl_subset_table", dense.closed_masks, repeat=1)
    print(f"nested complexity subset DP, n={marking.vertex_count} (marking graph)")
    bench("  ncl_subset_table / marking", "ncl_subset_table", marking.closed_masks, repeat=1)
    print(f"maximum clique, n={clique_n} (random p=3/4)")
    bench("  max_clique", "max_clique", clique_graph.adjacency_masks)
    print(f"chromatic number, n={chrom_n} (random p=1/2)")
    bench("  chromatic_number", "chromatic_number", chrom_graph.adjacency_masks)


if __name__ == "__main__":
    main()
