#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallbacks.

    python3 benchmarks/bench_kernels.py

Workloads mirror the real hot paths: spanning-tree enumeration on dense
graphs (the counting oracle) and batched bitmask canonicalization (the
isomorphism catalog).
"""

import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from qgdet import _slow  # noqa: E402
from qgdet.fixtures import _perm_bit_table, complete_graph, make_rng  # noqa: E402

try:
    from qgdet import _fast
except ImportError:
    _fast = None


def _time(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_tree_count():
    g = complete_graph(7)  # C(21, 6) = 54264 subsets
    eu = np.asarray([e[0] for e in g.edges], dtype=np.int64)
    ev = np.asarray([e[1] for e in g.edges], dtype=np.int64)
    rows = []
    t, n = _time(_slow.count_spanning_subsets, 7, eu, ev)
    rows.append(("python", t, n))
    if _fast:
        t, n = _time(_fast.count_spanning_subsets, 7, eu, ev)
        rows.append(("cython", t, n))
    return "spanning-tree count K7", rows


def bench_canonical():
    rng = make_rng(0)
    table = _perm_bit_table(7)  # 5040 permutations x 21 bits
    masks = rng.integers(0, 1 << 21, size=4000, dtype=np.int64)
    rows = []
    t, out = _time(_slow.canonical_forms, masks, table, repeat=2)
    rows.append(("python", t, int(out.sum())))
    if _fast:
        t, out = _time(_fast.canonical_forms, masks, table, repeat=2)
        rows.append(("cython", t, int(out.sum())))
    return "canonical forms, 4000 masks on 7 vertices", rows


def main():
    if _fast is None:
        print("compiled kernels not built; run: python3 setup.py build_ext --inplace")
    for name, rows in (bench_tree_count(), bench_canonical()):
        print(f"\n{name}")
        base = rows[0][1]
        checks = {r[2] for r in rows}
        assert len(checks) == 1, f"backends disagree: {rows}"
        for backend, t, _ in rows:
            print(f"  {backend:>7}: {t * 1e3:9.2f} ms   (x{base / t:.1f})")


if __name__ == "__main__":
    main()
