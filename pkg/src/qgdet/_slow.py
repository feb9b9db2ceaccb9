"""Pure-Python kernels, used when the compiled extension is unavailable.

Same contracts as qgdet._fast; see benchmarks/bench_kernels.py for the
speed comparison.
"""

from itertools import combinations

import numpy as np


def count_spanning_subsets(vertex_count, edges_u, edges_v):
    """Count (V-1)-edge subsets forming a spanning tree.

    Enumerates every subset and tests acyclic connectivity with union-find;
    a subset of V-1 edges spans exactly when no union ever closes a cycle.
    """
    k = vertex_count - 1
    e = len(edges_u)
    if k > e:
        return 0
    eu = list(edges_u)
    ev = list(edges_v)
    count = 0
    for combo in combinations(range(e), k):
        parent = list(range(vertex_count))
        good = True
        for i in combo:
            a = eu[i]
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            b = ev[i]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a == b:
                good = False
                break
            parent[a] = b
        if good:
            count += 1
    return count


def canonical_forms(masks, perm_bits):
    """Minimum edge-bitmask over a vertex-permutation table.

    perm_bits[p, b] is the image bit of bit b under permutation p.  Bit
    weights stay below 2**28 so the float64 matmul is exact.
    """
    masks = np.asarray(masks, dtype=np.int64)
    perm_bits = np.asarray(perm_bits)
    n_bits = perm_bits.shape[1]
    weights = (np.int64(1) << perm_bits.astype(np.int64)).astype(np.float64)
    bits = ((masks[:, None] >> np.arange(n_bits)[None, :]) & 1).astype(np.float64)
    out = np.empty(len(masks), dtype=np.int64)
    chunk = max(1, 4_000_000 // max(1, weights.shape[0]))
    for i in range(0, len(masks), chunk):
        images = bits[i : i + chunk] @ weights.T
        out[i : i + chunk] = images.min(axis=1).astype(np.int64)
    return out
