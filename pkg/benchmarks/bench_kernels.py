"""Compare the compiled kernels against the pure-Python fallback.

The implementation is fixed at import time, so each lane runs in its own
subprocess: the pure lane sets FTSPAN_PURE=1.  Usage:

    python benchmarks/bench_kernels.py
"""

import json
import os
import subprocess
import sys
import time


def workload():
    import numpy as np

    import ftspan.kernels as kernels
    from ftspan.generators import random_graph
    from ftspan.spanner import SpannerParams, ft_greedy_spanner

    results = {"implementation": kernels.IMPLEMENTATION}

    g = random_graph(1200, 0.01, seed=1, weight_range=(1.0, 2.0))
    adj = g.kernel_adjacency()
    ws = kernels.Workspace(g.n, g.m)
    sources = list(range(0, g.n, 24))
    t0 = time.perf_counter()
    for s in sources:
        ws.sssp(adj, s)
    results["sssp_ms_per_source"] = (time.perf_counter() - t0) * 1000 / len(sources)

    rng = np.random.default_rng(7)
    queries = [(int(rng.integers(g.n)), int(rng.integers(g.n))) for _ in range(400)]
    t0 = time.perf_counter()
    for s, t in queries:
        ws.st_search(adj, s, t, None, None, None, 3.0, False)
    results["st_search_us_per_query"] = (time.perf_counter() - t0) * 1e6 / len(queries)

    g2 = random_graph(60, 1.0, seed=2, weight_range=(1.0, 2.0))
    t0 = time.perf_counter()
    res = ft_greedy_spanner(g2, SpannerParams(k=3.0, f=2))
    results["greedy_n60_f2_ms"] = (time.perf_counter() - t0) * 1000
    results["greedy_n60_f2_edges"] = res.graph.m
    return results


def run_lane(pure):
    env = dict(os.environ)
    env["FTSPAN_BENCH_CHILD"] = "1"
    if pure:
        env["FTSPAN_PURE"] = "1"
    else:
        env.pop("FTSPAN_PURE", None)
    out = subprocess.run(
        [sys.executable, os.path.abspath(__file__)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout)


def main():
    fast = run_lane(pure=False)
    slow = run_lane(pure=True)
    if fast["implementation"] == slow["implementation"]:
        print("compiled kernels unavailable; both lanes ran pure Python")
    same = fast["greedy_n60_f2_edges"] == slow["greedy_n60_f2_edges"]
    print(f"greedy outputs identical: {same}")
    print(f"{'metric':<28} {fast['implementation']:>12} {slow['implementation']:>12} speedup")
    for key in ("sssp_ms_per_source", "st_search_us_per_query", "greedy_n60_f2_ms"):
        a, b = fast[key], slow[key]
        print(f"{key:<28} {a:>12.3f} {b:>12.3f} {b / a:>6.1f}x")


if __name__ == "__main__":
    if os.environ.get("FTSPAN_BENCH_CHILD"):
        print(json.dumps(workload()))
    else:
        main()
