"""Benchmark the compiled counting kernel against the pure-Python fallback.

Run:  python benchmarks/bench_kernel.py [--max-n 22]

The workload is the closed-subset scan that dominates every counting
operation: all 2^n subsets tested against the structure's join constraints.
"""

import argparse
import random
import time

from subsemi.catalog import build_named, glued_sum
from subsemi.kernel import available_backends
from subsemi.order import Poset, to_semilattice
from subsemi.randomgen import random_partial_algebra


def star_semilattice(atoms):
    """Antichain of the given size plus a top: the constraint-dense case."""
    n = atoms + 1
    return to_semilattice(Poset.from_covers(n, [(i, atoms) for i in range(atoms)]))


def broom(m):
    """Chain of m elements plus one pendant under the top."""
    covers = [(i, i + 1) for i in range(m - 1)] + [(m, m - 1)]
    return to_semilattice(Poset.from_covers(m + 1, covers))


def workloads(max_n):
    rng = random.Random(99)
    yield "star(n=%d)" % min(max_n, 18), star_semilattice(min(max_n, 18) - 1)
    yield "broom(n=%d)" % min(max_n, 20), broom(min(max_n, 20) - 1)
    tower = build_named("B4").structure
    while tower.n + 3 <= min(max_n, 19):
        tower = glued_sum(tower, build_named("B4").structure)
    yield "diamond tower(n=%d)" % tower.n, tower
    yield "random partial(n=%d)" % min(max_n, 20), random_partial_algebra(
        rng, min(max_n, 20), max_joins=40)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=20)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; showing pure Python only")
    print(f"{'workload':<24} {'constraints':>11} " +
          " ".join(f"{name:>12}" for name in backends) + "  speedup")
    for name, structure in workloads(args.max_n):
        cons = structure.closure_constraints()
        times = {}
        result = {}
        for bname, mod in backends.items():
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                result[bname] = mod.count_closed(structure.n, cons)
                best = min(best, time.perf_counter() - t0)
            times[bname] = best
        counts = set(result.values())
        assert len(counts) == 1, f"backends disagree on {name}: {result}"
        speed = ""
        if "cython" in times and "python" in times:
            speed = f"{times['python'] / times['cython']:8.1f}x"
        print(f"{name:<24} {len(cons):>11} " +
              " ".join(f"{times[b]:>11.4f}s" for b in backends) + " " + speed)


if __name__ == "__main__":
    main()
