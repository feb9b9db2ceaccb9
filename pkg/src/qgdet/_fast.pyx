# cython: language_level=3
"""Compiled kernels for the two enumeration-heavy inner loops: spanning-tree
subset counting and bitmask canonicalization under vertex permutations.

Contracts match qgdet._slow exactly; qgdet._kernels selects the backend.
"""

from libc.stdint cimport int32_t, int64_t

import numpy as np

DEF MAX_VERTS = 32


def count_spanning_subsets(int vertex_count, edges_u, edges_v):
    """Count (V-1)-edge subsets forming a spanning tree via union-find."""
    cdef const int64_t[::1] eu = np.ascontiguousarray(edges_u, dtype=np.int64)
    cdef const int64_t[::1] ev = np.ascontiguousarray(edges_v, dtype=np.int64)
    cdef int e = eu.shape[0]
    cdef int k = vertex_count - 1
    if vertex_count > MAX_VERTS or e > 62:
        raise ValueError("kernel supports at most 32 vertices and 62 edges")
    if k > e:
        return 0
    cdef int comb[62]
    cdef int parent[MAX_VERTS]
    cdef int64_t count = 0
    cdef int i, t, pos, a, b, good
    for i in range(k):
        comb[i] = i
    with nogil:
        while True:
            for i in range(vertex_count):
                parent[i] = i
            good = 1
            for t in range(k):
                i = comb[t]
                a = <int> eu[i]
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                b = <int> ev[i]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a == b:
                    good = 0
                    break
                parent[a] = b
            count += good
            pos = k - 1
            while pos >= 0 and comb[pos] == e - k + pos:
                pos -= 1
            if pos < 0:
                break
            comb[pos] += 1
            for t in range(pos + 1, k):
                comb[t] = comb[t - 1] + 1
    return count


def canonical_forms(masks, perm_bits):
    """Minimum edge-bitmask over a vertex-permutation table.

    Each permutation's bit relocation is precomputed as 7-bit chunk lookup
    tables, so the scan costs a few loads and ORs per (mask, permutation)
    pair; permutations run outermost to keep one table resident in cache.
    """
    cdef const int64_t[::1] m = np.ascontiguousarray(masks, dtype=np.int64)
    cdef const int32_t[:, ::1] pt = np.ascontiguousarray(perm_bits, dtype=np.int32)
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t n_perms = pt.shape[0]
    cdef int n_bits = pt.shape[1]
    cdef int n_chunks = (n_bits + 6) // 7
    if n_bits > 62:
        raise ValueError("kernel supports at most 62 edge bits")

    tables = np.zeros((n_perms, n_chunks, 128), dtype=np.int64)
    cdef int64_t[:, :, ::1] tv = tables
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] ov = out
    chunks = np.empty((n, n_chunks), dtype=np.int32)
    cdef int32_t[:, ::1] cv = chunks
    cdef Py_ssize_t i, p
    cdef int c, b, width, sub
    cdef int64_t mask, image
    with nogil:
        for p in range(n_perms):
            for c in range(n_chunks):
                width = n_bits - 7 * c
                if width > 7:
                    width = 7
                for sub in range(1 << width):
                    image = 0
                    for b in range(width):
                        if (sub >> b) & 1:
                            image |= (<int64_t> 1) << pt[p, 7 * c + b]
                    tv[p, c, sub] = image
        for i in range(n):
            mask = m[i]
            for c in range(n_chunks):
                cv[i, c] = <int32_t> ((mask >> (7 * c)) & 127)
            ov[i] = <int64_t> 0x7FFFFFFFFFFFFFFF
        for p in range(n_perms):
            for i in range(n):
                image = tv[p, 0, cv[i, 0]]
                for c in range(1, n_chunks):
                    image |= tv[p, c, cv[i, c]]
                if image < ov[i]:
                    ov[i] = image
    return out
