"""Spanning-tree counts by independent routes.

Five methods must agree on every connected graph: exhaustive subset
enumeration, a principal minor of L, det'(L)/V, the harmonic-Laplacian
product formula (prod d_v / 2E) det'(Delta), and the regular-graph
specialization (d^(V-1)/V) det'(Delta).  Disagreement anywhere is a bug,
so integer extraction is deliberately brittle: round half away from zero
with a 1e-6 guard band, and raise instead of rounding anything farther
from an integer.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._kernels import count_spanning_subsets
from .errors import NonIntegerDeterminant, NotRegular, TooLarge
from .fixtures import MAX_BRUTE_EDGES
from .graphs import DiscreteGraph
from .matrices import (
    combinatorial_laplacian,
    det_prime,
    harmonic_laplacian,
    principal_minor,
    spectrum,
)


class TreeMethod(enum.Enum):
    BRUTE_FORCE = "brute_force"
    MINOR = "minor"
    DET_PRIME_OVER_V = "det_prime_over_v"
    HARMONIC = "harmonic"
    REGULAR = "regular"


@dataclass(frozen=True)
class TreeCount:
    count: int
    method: TreeMethod


_GUARD_BAND = 1e-6


def round_exact(x: float, what: str = "determinant") -> int:
    """Nearest integer, half away from zero, within the guard band."""
    n = math.floor(x + 0.5) if x >= 0 else math.ceil(x - 0.5)
    if abs(x - n) >= _GUARD_BAND:
        raise NonIntegerDeterminant(f"{what} {x!r} is not within {_GUARD_BAND} of an integer")
    return int(n)


def count_brute_force(g: DiscreteGraph) -> TreeCount:
    """Exact enumeration oracle; guarded to keep runtimes sane."""
    if g.edge_count > MAX_BRUTE_EDGES:
        raise TooLarge(f"{g.edge_count} edges exceeds enumeration guard {MAX_BRUTE_EDGES}")
    eu = np.asarray([e[0] for e in g.edges], dtype=np.int64)
    ev = np.asarray([e[1] for e in g.edges], dtype=np.int64)
    n = int(count_spanning_subsets(g.vertex_count, eu, ev))
    return TreeCount(n, TreeMethod.BRUTE_FORCE)


def count_matrix_tree(g: DiscreteGraph) -> TreeCount:
    """Principal minor det(L[0]); any index gives the same value."""
    minor = principal_minor(combinatorial_laplacian(g), 0)
    return TreeCount(round_exact(minor, "principal minor"), TreeMethod.MINOR)


def count_det_prime_over_v(g: DiscreteGraph) -> TreeCount:
    """det'(L) / V."""
    d = det_prime(spectrum(combinatorial_laplacian(g)))
    return TreeCount(round_exact(d / g.vertex_count, "det'(L)/V"), TreeMethod.DET_PRIME_OVER_V)


def count_harmonic(g: DiscreteGraph) -> TreeCount:
    """(prod d_v / 2E) det'(Delta)."""
    d = det_prime(spectrum(harmonic_laplacian(g)))
    value = g.degree_product() / (2 * g.edge_count) * d
    return TreeCount(round_exact(value, "harmonic count"), TreeMethod.HARMONIC)


def count_regular(g: DiscreteGraph, d: int | None = None) -> TreeCount:
    """(d^(V-1) / V) det'(Delta) for a d-regular graph."""
    common = g.is_regular()
    if common is None or (d is not None and d != common):
        raise NotRegular(f"degrees {g.degrees} are not {d if d is not None else 'uniform'}")
    dp = det_prime(spectrum(harmonic_laplacian(g)))
    value = common ** (g.vertex_count - 1) / g.vertex_count * dp
    return TreeCount(round_exact(value, "regular count"), TreeMethod.REGULAR)


def all_methods(g: DiscreteGraph) -> dict[TreeMethod, int]:
    """Every applicable count; brute force only under the guard."""
    out = {
        TreeMethod.MINOR: count_matrix_tree(g).count,
        TreeMethod.DET_PRIME_OVER_V: count_det_prime_over_v(g).count,
        TreeMethod.HARMONIC: count_harmonic(g).count,
    }
    if g.edge_count <= MAX_BRUTE_EDGES:
        out[TreeMethod.BRUTE_FORCE] = count_brute_force(g).count
    if g.is_regular() is not None:
        out[TreeMethod.REGULAR] = count_regular(g).count
    return out
