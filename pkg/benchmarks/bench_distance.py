#!/usr/bin/env python3
"""Time the weight-search kernel: compiled extension vs pure Python.

Both kernels implement the same contract (``search_weight(gen_x, gen_z,
supports, w)``); the distance search picks the compiled one when the
build produced it.  This script runs identical workloads through both
and prints a per-weight comparison.

Usage: python3 benchmarks/bench_distance.py [--genus G] [--max-weight W]
"""

import argparse
import time

from floqtess import floquet
from floqtess._distpure import search_weight as pure_search
from floqtess.coloring import three_color
from floqtess.derive import incenter_complex
from floqtess.floquet import connected_supports, run_schedule
from floqtess.surface import fundamental_polygon

try:
    from floqtess._distkernel import search_weight as compiled_search
except ImportError:
    compiled_search = None


def steady_generators(genus):
    sides = 4 * genus
    cx = incenter_complex(fundamental_polygon(genus, True), sides, sides)
    schedule = three_color(cx)
    result = run_schedule(schedule, 9)
    n = result.n
    mask = (1 << n) - 1
    phase = result.steady_phases[0]
    gx = [r >> n for r in phase.rows]
    gz = [r & mask for r in phase.rows]
    return cx, n, gx, gz


def best_of(fn, repeats=3):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--genus", type=int, default=3,
                    help="orientable genus of the incenter complex (default 3)")
    ap.add_argument("--max-weight", type=int, default=5,
                    help="largest support size to search (default 5)")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    cx, n, gx, gz = steady_generators(args.genus)
    adj = floquet._vertex_adjacency(cx)
    print(f"active kernel: {floquet.KERNEL}")
    print(f"workload: incenter complex at genus {args.genus}, n={n}, "
          f"{len(gx)} stabilizer generators")
    print(f"{'w':>3} {'supports':>9} {'pure (s)':>10} {'compiled (s)':>13} "
          f"{'speedup':>8}")
    for w in range(3, args.max_weight + 1):
        supports = connected_supports(adj, w)
        t_pure, hits_pure = best_of(
            lambda: pure_search(gx, gz, supports, w), args.repeats
        )
        if compiled_search is None:
            print(f"{w:>3} {len(supports):>9} {t_pure:>10.4f} "
                  f"{'n/a':>13} {'n/a':>8}")
            continue
        t_comp, hits_comp = best_of(
            lambda: compiled_search(gx, gz, supports, w), args.repeats
        )
        if sorted(hits_pure) != sorted(hits_comp):
            raise SystemExit(f"kernel disagreement at weight {w}")
        print(f"{w:>3} {len(supports):>9} {t_pure:>10.4f} {t_comp:>13.4f} "
              f"{t_pure / t_comp:>7.1f}x")


if __name__ == "__main__":
    main()
