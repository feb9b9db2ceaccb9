"""Reproducible graph fixtures.

Two generators feed the randomized suites and the exhaustive checks:

* random_connected_graph draws Erdos-Renyi graphs conditioned on
  connectivity by rejection, from a caller-supplied PCG64 stream, so any
  run is replayable from its seed.
* graph_catalog enumerates every connected simple graph up to isomorphism
  for small vertex counts, by augmenting each (n-1)-vertex graph with one
  new vertex joined to every vertex subset and deduplicating canonical
  edge-bitmasks (minimum over all vertex permutations).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from . import _kernels
from .graphs import DiscreteGraph, build_graph

MAX_BRUTE_EDGES = 24


# -- named families ----------------------------------------------------------

def path_graph(n: int) -> DiscreteGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> DiscreteGraph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> DiscreteGraph:
    """Hub 0 joined to vertices 1..leaves; E = leaves."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> DiscreteGraph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, p: int) -> DiscreteGraph:
    """Parts {0..m-1} and {m..m+p-1}."""
    return build_graph(m + p, [(i, m + j) for i in range(m) for j in range(p)])


# -- seeded random fixtures ---------------------------------------------------

def make_rng(seed: int) -> np.random.Generator:
    """PCG64 stream; the fixed algorithm keeps fixtures replayable."""
    return np.random.Generator(np.random.PCG64(seed))


def random_connected_graph(
    rng: np.random.Generator,
    max_vertices: int,
    min_vertices: int = 2,
    edge_prob: float = 0.5,
    max_edges: int = MAX_BRUTE_EDGES,
) -> DiscreteGraph:
    """Erdos-Renyi conditioned on connectivity (and an edge cap) by rejection."""
    while True:
        v = int(rng.integers(min_vertices, max_vertices + 1))
        pairs = [(i, j) for i in range(v) for j in range(i + 1, v)]
        keep = rng.random(len(pairs)) < edge_prob
        edges = [p for p, k in zip(pairs, keep) if k]
        if len(edges) > max_edges:
            continue
        if not edges:
            continue
        if _mask_connected(_edges_to_mask(edges, v), v):
            return build_graph(v, edges)


def random_lengths(
    rng: np.random.Generator, edge_count: int, low: float, high: float
) -> tuple[float, ...]:
    """Uniform lengths in [low, high)."""
    return tuple(low + (high - low) * rng.random(edge_count))


# -- exhaustive catalog --------------------------------------------------------
#
# Edge bitmasks index vertex pairs lexicographically: (0,1), (0,2), ...,
# (0,n-1), (1,2), ...  Bit weights fit in int64 through n = 8.

@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return {p: b for b, p in enumerate(pairs)}


@lru_cache(maxsize=None)
def _perm_bit_table(n: int) -> np.ndarray:
    """perm_bits[p, b]: image of bit b under the p-th vertex permutation."""
    idx = _pair_index(n)
    pairs = list(idx)
    perms = list(permutations(range(n)))
    table = np.empty((len(perms), len(pairs)), dtype=np.int32)
    for p, perm in enumerate(perms):
        for b, (i, j) in enumerate(pairs):
            u, v = perm[i], perm[j]
            table[p, b] = idx[(u, v) if u < v else (v, u)]
    return table


def _edges_to_mask(edges, n: int) -> int:
    idx = _pair_index(n)
    mask = 0
    for u, v in edges:
        mask |= 1 << idx[(u, v) if u < v else (v, u)]
    return mask


def _mask_to_edges(mask: int, n: int) -> list[tuple[int, int]]:
    return [p for p, b in _pair_index(n).items() if (mask >> b) & 1]


def _mask_connected(mask: int, n: int) -> bool:
    nbrs = [0] * n
    for (u, v), b in _pair_index(n).items():
        if (mask >> b) & 1:
            nbrs[u] |= 1 << v
            nbrs[v] |= 1 << u
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        v = 0
        f = frontier
        while f:
            if f & 1:
                nxt |= nbrs[v]
            f >>= 1
            v += 1
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


@lru_cache(maxsize=None)
def _unlabeled_masks(n: int) -> tuple[int, ...]:
    """Canonical edge-bitmasks of all simple graphs on n vertices, up to
    isomorphism.  Complete because deleting the last vertex of any n-vertex
    graph leaves a graph whose canonical form is in the (n-1)-level list,
    and every neighborhood subset is tried when adding the vertex back."""
    if n == 1:
        return (0,)
    idx = _pair_index(n)
    prev_pairs = list(_pair_index(n - 1))
    candidates: set[int] = set()
    for base in _unlabeled_masks(n - 1):
        lifted = 0
        for b, (i, j) in enumerate(prev_pairs):
            if (base >> b) & 1:
                lifted |= 1 << idx[(i, j)]
        for subset in range(1 << (n - 1)):
            extra = 0
            for i in range(n - 1):
                if (subset >> i) & 1:
                    extra |= 1 << idx[(i, n - 1)]
            candidates.add(lifted | extra)
    canon = _kernels.canonical_forms(
        np.fromiter(candidates, dtype=np.int64, count=len(candidates)),
        _perm_bit_table(n),
    )
    return tuple(sorted(set(int(c) for c in canon)))


def connected_graph_count(n: int) -> int:
    """Number of connected simple graphs on n vertices up to isomorphism."""
    return sum(1 for m in _unlabeled_masks(n) if _mask_connected(m, n))


def graph_catalog(max_vertices: int, min_vertices: int = 2) -> tuple[DiscreteGraph, ...]:
    """Every connected simple graph with min_vertices <= V <= max_vertices,
    one representative per isomorphism class, in deterministic order."""
    out: list[DiscreteGraph] = []
    for n in range(min_vertices, max_vertices + 1):
        for mask in _unlabeled_masks(n):
            if _mask_connected(mask, n):
                out.append(build_graph(n, _mask_to_edges(mask, n)))
    return tuple(out)
