#!/usr/bin/env python3
"""Time the edge-subset kernel on both backends for 20-vertex spiders.

    python benchmarks/bench_kernels.py [--nu 9 --nu 5,4] [--runs 3] [--json]

The numba backend is warmed up once (JIT compile) before timing. Both
backends must return identical histograms; a mismatch aborts the run.
"""

import argparse
import json
import time

import numpy as np

from csfkit import kernels
from csfkit.graphs import spider
from csfkit.partitions import Partition

DEFAULT_NUS = ["9", "6,2,1", "3,3,3", "1,1,1,1,1,1,1,1,1"]


def bench(fn, runs):
    times = []
    result = None
    for _ in range(runs):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return result, {"min": min(times), "mean": sum(times) / len(times), "runs": times}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nu", action="append", default=None)
    parser.add_argument("--runs", type=int, default=3)
    parser.add_argument("--json", action="store_true", help="emit results as JSON")
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])
    if "numba" in backends:
        g = spider((1,))
        kernels.edge_subset_histogram(g.vertex_count, g.edges, backend="numba")

    rows = []
    for text in args.nu or DEFAULT_NUS:
        g = spider(Partition.parse(text))
        results = {}
        row = {"nu": text, "vertices": g.vertex_count, "subsets": 1 << len(g.edges)}
        for backend in backends:
            hist, stats = bench(
                lambda b=backend: kernels.edge_subset_histogram(g.vertex_count, g.edges, backend=b), args.runs
            )
            results[backend] = hist
            row[backend] = stats
        if len(results) == 2 and not np.array_equal(results["numpy"], results["numba"]):
            raise SystemExit(f"backends disagree for nu={text}")
        if len(backends) == 2:
            row["speedup"] = row["numpy"]["min"] / row["numba"]["min"]
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'nu':<20}{'subsets':>10}" + "".join(f"{b + ' (s)':>14}" for b in backends) + f"{'speedup':>10}")
    for row in rows:
        line = f"{row['nu']:<20}{row['subsets']:>10}" + "".join(f"{row[b]['min']:>14.3f}" for b in backends)
        line += f"{row['speedup']:>10.1f}" if "speedup" in row else ""
        print(line)


if __name__ == "__main__":
    main()
