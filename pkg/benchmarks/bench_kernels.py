"""Side-by-side timing of the compiled and pure-Python kernels.

Two workloads dominate the workbench's runtime: canonical-form search
(driving enumeration and recognition) and the magic-labeling DFS (driving
the oracle).  This script times both against each available backend and
reports the speedup.

Run:  python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

from vertexmagic.abelian import cayley_tables, enumerate_abelian_groups
from vertexmagic.canon import refinement_cells
from vertexmagic.families import build, enumerate_connected
from vertexmagic.kernels import available_backends
from vertexmagic.workbench import standard_grid


def canon_workload():
    graphs = []
    graphs += enumerate_connected(9, 1, 4)
    graphs += enumerate_connected(8, 2, 3)
    return [(g.n, g.masks, refinement_cells(g)) for g in graphs]


def solve_workload():
    jobs = []
    groups = list(enumerate_abelian_groups(8))
    for inst in standard_grid()[::4]:
        g, _ = build(inst)
        core = [v for v in range(g.n) if g.degree(v) > 1]
        if not core or len(core) == g.n == 2:
            continue
        idx = {v: i for i, v in enumerate(core)}
        pend = [0] * len(core)
        for v in range(g.n):
            if g.degree(v) == 1:
                pend[idx[g.adj[v][0]]] += 1
        neigh = tuple(
            tuple(idx[w] for w in g.adj[v] if g.degree(w) > 1) for v in core
        )
        supports = [i for i, p in enumerate(pend) if p]
        for spec in groups[::3]:
            m, add, neg = cayley_tables(spec)
            for mu in range(m):
                if supports and mu == 0:
                    continue
                forced = [-1] * len(core)
                for s in supports:
                    forced[s] = mu
                jobs.append((len(core), neigh, pend, forced, m, add, neg, mu))
    return jobs


def run(repeat: int = 1) -> None:
    backends = available_backends()
    canon_jobs = canon_workload()
    solve_jobs = solve_workload()
    print(f"workloads: {len(canon_jobs)} canonical codes, "
          f"{len(solve_jobs)} solver slices")
    results: dict[str, tuple[float, float]] = {}
    for name, mod in sorted(backends.items()):
        t0 = time.perf_counter()
        for _ in range(repeat):
            for n, masks, cells in canon_jobs:
                mod.min_code(n, masks, cells)
        t_canon = time.perf_counter() - t0
        t0 = time.perf_counter()
        for _ in range(repeat):
            for job in solve_jobs:
                mod.search_exists(*job)
        t_solve = time.perf_counter() - t0
        results[name] = (t_canon, t_solve)
        print(f"{name:8s} canon: {t_canon:8.3f}s   solve: {t_solve:8.3f}s")
    if "cython" in results and "python" in results:
        pc, ps = results["python"]
        cc, cs = results["cython"]
        print(f"speedup  canon: {pc / cc:6.1f}x   solve: {ps / cs:6.1f}x")


if __name__ == "__main__":
    import sys

    run(repeat=int(sys.argv[1]) if len(sys.argv) > 1 else 3)
