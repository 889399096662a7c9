#!/usr/bin/env python3
"""Time the jit kernels against the no-jit fallback on realistic inputs.

Run:  python benchmarks/bench_kernels.py [--quick]

The workloads are the three hot loops as they actually occur in the verdict
pipeline: the odd-hole DFS on the reduced core of a large enhanced power
graph, the subset-enumeration Berge oracle on 12-vertex graphs, and the
clique-neighborhood scan on a twin quotient.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from ggx import _kernels_nb, _kernels_py
from ggx.corpus import cached_enhanced_graph
from ggx.graphs import complement, twin_quotient
from ggx.groups import build_group
from ggx.perfect import clique_neighborhood_reduction
from ggx.powergraphs import enhanced_power_graph
from ggx.suites import random_small_graphs


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def open_masks(g):
    out = np.zeros(g.n, dtype=np.int64)
    for v in range(g.n):
        m = 0
        for u in g.neighbors(v):
            m |= 1 << int(u)
        out[v] = m
    return out


def bench_hole_search(spec: str, min_len: int, use_complement: bool):
    eg = enhanced_power_graph(build_group(spec)) if spec not in ("S6",) else cached_enhanced_graph(spec)
    q, _ = twin_quotient(eg)
    core, _ = clique_neighborhood_reduction(q)
    target = complement(core) if use_complement else core
    label = f"hole_search  {spec} core ({target.n} vertices, min_len {min_len}, {'complement' if use_complement else 'graph'})"
    t_nb, r_nb = timed(lambda: _kernels_nb.hole_search(target._adj, target.n, min_len, 10**9))
    t_py, r_py = timed(lambda: _kernels_py.hole_search(target._adj, target.n, min_len, 10**9), repeat=1)
    assert r_nb[0] == r_py[0] and r_nb[2] == r_py[2], "kernel paths disagree"
    return label, t_nb, t_py, f"steps={r_nb[2]:,}"


def bench_brute(count: int):
    graphs = [g for g in random_small_graphs(count, seed=5150) if g.n == 12]
    masks = [open_masks(g) for g in graphs]

    def run(mod):
        return [mod.brute_odd_hole(m, 12) for m in masks]

    t_nb, r_nb = timed(lambda: run(_kernels_nb))
    t_py, r_py = timed(lambda: run(_kernels_py), repeat=1)
    assert r_nb == r_py
    return f"brute_odd_hole  {len(graphs)} twelve-vertex graphs", t_nb, t_py, ""


def bench_clique_reduce(spec: str):
    eg = enhanced_power_graph(build_group(spec))
    q, _ = twin_quotient(eg)
    t_nb, r_nb = timed(lambda: _kernels_nb.clique_reduce(q._adj, q.n))
    t_py, r_py = timed(lambda: _kernels_py.clique_reduce(q._adj, q.n), repeat=1)
    assert np.array_equal(r_nb[0], r_py[0]) and np.array_equal(r_nb[1], r_py[1])
    return f"clique_reduce  {spec} quotient ({q.n} vertices)", t_nb, t_py, ""


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    # warm up the jit compiler outside the timings
    g0 = next(iter(random_small_graphs(1, seed=1)))
    _kernels_nb.hole_search(g0._adj, g0.n, 5, 10**6)
    _kernels_nb.brute_odd_hole(open_masks(g0), g0.n)
    _kernels_nb.clique_reduce(g0._adj, g0.n)

    rows = []
    spec = "S5" if args.quick else "S6"
    rows.append(bench_hole_search(spec, 5, use_complement=False))
    rows.append(bench_hole_search(spec, 7, use_complement=True))
    rows.append(bench_brute(200 if args.quick else 1000))
    rows.append(bench_clique_reduce("S5" if args.quick else "S6"))

    width = max(len(r[0]) for r in rows) + 2
    print(f"{'workload':<{width}} {'jit':>10} {'no-jit':>10} {'speedup':>9}  notes")
    for label, t_nb, t_py, note in rows:
        print(f"{label:<{width}} {t_nb:>9.4f}s {t_py:>9.4f}s {t_py / max(t_nb, 1e-9):>8.1f}x  {note}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
