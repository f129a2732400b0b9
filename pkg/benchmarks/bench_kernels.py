"""Compare the compiled kernels against the pure-Python fallback.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

Micro-benchmarks call both backends in-process; the end-to-end rows run
a fresh interpreter per backend (the backend is fixed at import time).
"""

import os
import random
import subprocess
import sys
import time

from edgealg import _kernels_pure
from edgealg.families import cube, octagon

try:
    from edgealg import _core
except ImportError:
    _core = None


def timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def random_rows(rng, nvars, nrows, degree=3):
    rows = []
    for _ in range(nrows):
        a = [0] * nvars
        b = [0] * nvars
        for _ in range(degree):
            a[rng.randrange(nvars)] += 1
            b[rng.randrange(nvars)] += 1
        a, b = tuple(a), tuple(b)
        if a == b:
            continue
        if a < b:
            a, b = b, a  # rows must be lex-oriented or reduction need not halt
        rows.append((a, b))
    return rows


def bench_reducer(nvars=20, nrows=60, nqueries=4000):
    rng = random.Random(7)
    rows = random_rows(rng, nvars, nrows)
    queries = []
    for _ in range(nqueries):
        m = [0] * nvars
        for _ in range(6):
            m[rng.randrange(nvars)] += 1
        queries.append(tuple(m))

    def run(make):
        red = make(nvars)
        for a, b in rows:
            red.add_row(a, b)
        def body():
            for q in queries:
                red.nf(q)
        return timed(body)

    pure = run(_kernels_pure.Reducer)
    comp = run(_core.Reducer) if _core is not None else None
    return "reducer nf x%d (%d vars, %d rows)" % (nqueries, nvars, nrows), pure, comp


def bench_fibers(g, degree):
    eu, ev = [], []
    vpos = {v: k for k, v in enumerate(g.vertices)}
    for u, w in g.edges:
        eu.append(vpos[u])
        ev.append(vpos[w])

    def run(mod):
        return timed(
            lambda: mod.fiber_groups_exact(eu, ev, g.n_vertices, degree, True)
        )

    pure = run(_kernels_pure)
    comp = run(_core) if _core is not None else None
    label = "fibers %d edges, degree %d" % (g.n_edges, degree)
    return label, pure, comp


def bench_end_to_end():
    code = (
        "import time, edgealg as ea;"
        "g = ea.octagon(); t0 = time.perf_counter();"
        "c = ea.minimal_generator_census(g, max_deg=7);"
        "assert c.total == 15;"
        "print(time.perf_counter() - t0)"
    )

    def run(force_pure):
        env = dict(os.environ)
        env.pop("EDGEALG_PURE", None)
        if force_pure:
            env["EDGEALG_PURE"] = "1"
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        if out.returncode != 0:
            raise RuntimeError(out.stderr)
        return float(out.stdout.strip())

    pure = run(True)
    comp = run(False) if _core is not None else None
    return "octagon census to degree 7 (subprocess)", pure, comp


def main():
    if _core is None:
        print("compiled backend unavailable; timing the pure backend only\n")
    rows = [
        bench_reducer(),
        bench_fibers(cube(), 4),
        bench_fibers(cube(), 5),
        bench_fibers(octagon(), 5),
        bench_fibers(octagon(), 6),
        bench_end_to_end(),
    ]
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure':>9}  {'compiled':>9}  {'speedup':>8}")
    for label, pure, comp in rows:
        if comp is None:
            print(f"{label:<{width}}  {pure:>8.4f}s  {'-':>9}  {'-':>8}")
        else:
            print(
                f"{label:<{width}}  {pure:>8.4f}s  {comp:>8.4f}s"
                f"  {pure / comp:>7.1f}x"
            )


if __name__ == "__main__":
    main()
