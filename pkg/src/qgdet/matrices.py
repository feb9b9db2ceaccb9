"""Graph matrices and their real spectra.

Four matrices share one container: the combinatorial Laplacian L = D - A,
the harmonic Laplacian D^-1 L, the inverse-length-weighted matrix R, and
its equilateral special case L / ell.  All have zero row sums, so the
constant vector spans the kernel on a connected graph, and every needed
spectrum comes from a symmetric eigenproblem: L and R are symmetric, and
the harmonic Laplacian is similar to D^-1/2 L D^-1/2.

The pruned determinant drops the zero mode positionally (index 0 of the
ascending spectrum), never by magnitude: connectivity guarantees a simple
kernel, and a second near-zero eigenvalue should surface as an error, not
be silently discarded.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, NonpositiveEigenvalue
from .graphs import DiscreteGraph, MetricGraph


class MatrixKind(enum.Enum):
    COMBINATORIAL = "L"
    HARMONIC = "Delta"
    WEIGHTED = "R"
    EQUILATERAL_WEIGHTED = "R_tilde"


@dataclass(frozen=True)
class LaplacianMatrix:
    entries: np.ndarray
    kind: MatrixKind
    degrees: tuple[int, ...] | None = None

    def __post_init__(self):
        self.entries.setflags(write=False)

    @property
    def size(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class SpectrumReal:
    """Ascending real eigenvalues; index 0 is the discarded zero mode."""

    eigenvalues: tuple[float, ...]
    kind: MatrixKind
    zero_index: int = 0

    @property
    def nonzero(self) -> tuple[float, ...]:
        return self.eigenvalues[1:]


def _adjacency_array(g: DiscreteGraph) -> np.ndarray:
    a = np.zeros((g.vertex_count, g.vertex_count))
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def combinatorial_laplacian(g: DiscreteGraph) -> LaplacianMatrix:
    """L = D - A."""
    a = _adjacency_array(g)
    l = np.diag(np.asarray(g.degrees, dtype=float)) - a
    return LaplacianMatrix(l, MatrixKind.COMBINATORIAL, g.degrees)


def harmonic_laplacian(g: DiscreteGraph) -> LaplacianMatrix:
    """D^-1 L; row sums zero, spectrum in [0, 2]."""
    l = combinatorial_laplacian(g).entries
    d = np.asarray(g.degrees, dtype=float)
    return LaplacianMatrix(l / d[:, None], MatrixKind.HARMONIC, g.degrees)


def weighted_r(mg: MetricGraph) -> LaplacianMatrix:
    """Off-diagonal -1/length, diagonal the incident inverse-length sum."""
    g = mg.graph
    r = np.zeros((g.vertex_count, g.vertex_count))
    for (u, v), ell in zip(g.edges, mg.lengths):
        w = 1.0 / ell
        r[u, v] -= w
        r[v, u] -= w
        r[u, u] += w
        r[v, v] += w
    return LaplacianMatrix(r, MatrixKind.WEIGHTED, g.degrees)


def equilateral_r(g: DiscreteGraph, ell: float) -> LaplacianMatrix:
    """L / ell, the weighted matrix of the equilateral graph."""
    l = combinatorial_laplacian(g).entries
    return LaplacianMatrix(l / ell, MatrixKind.EQUILATERAL_WEIGHTED, g.degrees)


_RESIDUAL_TOL = 1e-10


def spectrum(m: LaplacianMatrix) -> SpectrumReal:
    """All eigenvalues, ascending, via a symmetric eigensolver.

    The harmonic kind is diagonalized through its symmetric similarity
    D^-1/2 L D^-1/2 so eigenvalues are provably real; each eigenpair must
    satisfy a residual check against the diagonalized matrix.
    """
    if m.kind is MatrixKind.HARMONIC:
        if m.degrees is None:
            raise ValueError("harmonic matrix requires degree data")
        s = np.asarray(m.degrees, dtype=float) ** 0.5
        sym = m.entries * s[:, None] / s[None, :]
        sym = 0.5 * (sym + sym.T)
    else:
        sym = m.entries
    try:
        vals, vecs = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    scale = max(abs(vals[0]), abs(vals[-1]), 1e-300)
    residual = sym @ vecs - vecs * vals[None, :]
    worst = float(np.linalg.norm(residual, axis=0).max())
    if worst > _RESIDUAL_TOL * scale:
        raise ConvergenceFailure(
            f"eigenpair residual {worst:.3e} exceeds {_RESIDUAL_TOL:.0e} * {scale:.3e}"
        )
    return SpectrumReal(tuple(float(x) for x in vals), m.kind)


_POSITIVE_FLOOR = 1e-12


def det_prime(s: SpectrumReal) -> float:
    """Product of the eigenvalues above the zero mode, in log space."""
    retained = s.nonzero
    for x in retained:
        if x <= _POSITIVE_FLOOR:
            raise NonpositiveEigenvalue(
                f"retained eigenvalue {x} <= {_POSITIVE_FLOOR}; "
                "disconnected input or numerical breakdown"
            )
    return math.exp(math.fsum(math.log(x) for x in retained))


def det_prime_matrix(m: LaplacianMatrix) -> float:
    return det_prime(spectrum(m))


def principal_minor(m: LaplacianMatrix, i: int) -> float:
    """det of the matrix with row i and column i removed, by LU."""
    n = m.size
    if not 0 <= i < n:
        raise ValueError(f"index {i} outside 0..{n - 1}")
    keep = [j for j in range(n) if j != i]
    sub = m.entries[np.ix_(keep, keep)]
    return float(np.linalg.det(sub))
