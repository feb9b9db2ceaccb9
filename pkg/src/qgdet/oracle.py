"""Independent enumeration of metric-graph Laplacian eigenvalues.

Two sources that must agree:

* enumerate_equilateral assembles the spectrum below a cutoff from the
  phase set: families k = t_j + 2 pi n / ell (n >= 0) and
  k = -t_j + 2 pi n / ell (n >= 1) for each j >= 2, a signed lattice
  contribution of beta - 1 at every multiple of pi / ell, +2 at every
  multiple of 2 pi / ell, and k = 0 once.  The lattice weights come from
  the leading term of the zeta closed form; the interval graph, where
  beta - 1 = -1 must cancel one mode at every even multiple, is the
  designated smoke test of that decoding.
* secular_solve scans |det(I - e^(ikL) S)| on a dense grid, refines each
  interior minimum by interval halving, and reads multiplicities off the
  unitary matrix's eigenphase cluster at +1.  S is the standard vertex
  scattering with reflection 2/d - 1 and transmission 2/d.

Complex arithmetic stays inside this module.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import GridTooCoarse, RootRefinementFailure
from .graphs import DiscreteGraph, MetricGraph
from .zeta import phase_set


class SpectrumSource(enum.Enum):
    VON_BELOW_ENUMERATION = "von_below_enumeration"
    SECULAR_SOLVER = "secular_solver"


@dataclass(frozen=True)
class QuantumSpectrum:
    """Ascending wavenumbers k with k^2 an eigenvalue, multiplicity by
    repetition; k = 0 is always first."""

    ks: tuple[float, ...]
    cutoff: float
    source: SpectrumSource

    def counting(self, k: float) -> int:
        return sum(1 for x in self.ks if x <= k)


def _snap(a: float) -> float:
    """Stabilize phase keys so equal families collide exactly."""
    return round(a, 12)


def enumerate_equilateral(g: DiscreteGraph, ell: float, cutoff_k: float) -> QuantumSpectrum:
    """Assemble the spectrum below cutoff_k from the finite phase set."""
    if not cutoff_k > 0:
        raise ValueError(f"cutoff must be positive, got {cutoff_k}")
    unit = 2.0 * math.pi / ell
    # Keys measure k in units of 2 pi / ell; lattice points are half-integers.
    limit = cutoff_k / unit * (1.0 + 1e-12) + 1e-12
    counts: dict[float, int] = {}

    def add(key: float, mult: int) -> None:
        counts[key] = counts.get(key, 0) + mult

    for a in phase_set(g, ell).scaled[1:]:
        a = _snap(min(a, 0.5))
        n = 0
        while n + a <= limit:
            add(n + a, 1)
            n += 1
        n = 1
        while n - a <= limit:
            add(n - a, 1)
            n += 1
    beta_weight = g.betti - 1
    if beta_weight != 0:
        n = 1
        while 0.5 * n <= limit:
            add(0.5 * n, beta_weight)
            n += 1
    n = 1
    while float(n) <= limit:
        add(float(n), 2)
        n += 1

    ks = [0.0]
    for key in sorted(counts):
        mult = counts[key]
        if mult < 0:
            raise RuntimeError(
                f"negative multiplicity {mult} at k = {key * unit}; "
                "lattice decoding violated"
            )
        ks.extend([key * unit] * mult)
    return QuantumSpectrum(tuple(ks), cutoff_k, SpectrumSource.VON_BELOW_ENUMERATION)


# -- secular solver -----------------------------------------------------------

def _bond_system(mg: MetricGraph) -> tuple[np.ndarray, np.ndarray]:
    """Directed-bond lengths and the vertex scattering matrix.

    Bond 2i runs edge i forward, bond 2i+1 backward; S[b_out, b_in] is
    2/d - delta(reversal) at the shared vertex, zero otherwise.
    """
    g = mg.graph
    n_bonds = 2 * g.edge_count
    lengths = np.empty(n_bonds)
    origin = np.empty(n_bonds, dtype=int)
    terminus = np.empty(n_bonds, dtype=int)
    for i, ((u, v), ell_e) in enumerate(zip(g.edges, mg.lengths)):
        lengths[2 * i] = lengths[2 * i + 1] = ell_e
        origin[2 * i], terminus[2 * i] = u, v
        origin[2 * i + 1], terminus[2 * i + 1] = v, u
    s = np.zeros((n_bonds, n_bonds))
    degs = g.degrees
    for b_in in range(n_bonds):
        v = terminus[b_in]
        for b_out in range(n_bonds):
            if origin[b_out] != v:
                continue
            s[b_out, b_in] = 2.0 / degs[v]
            if b_out == b_in ^ 1:
                s[b_out, b_in] -= 1.0
    return lengths, s


def _secular_matrix(k: float, lengths: np.ndarray, s: np.ndarray) -> np.ndarray:
    phases = np.exp(1j * k * lengths)
    return phases[:, None] * s


_PHASE_TOL = 1e-6
_REFINE_WIDTH = 1e-9


def _multiplicity_at(k: float, lengths: np.ndarray, s: np.ndarray) -> int:
    eigs = np.linalg.eigvals(_secular_matrix(k, lengths, s))
    return int(np.sum(np.abs(np.angle(eigs)) <= _PHASE_TOL))


def _refine_minimum(f, lo: float, hi: float) -> float:
    """Interval-halving minimization of |F| down to the target width."""
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(200):
        if b - a <= _REFINE_WIDTH:
            return 0.5 * (a + b)
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    raise RootRefinementFailure(f"minimum in [{lo}, {hi}] did not localize")


def secular_solve(mg: MetricGraph, cutoff_k: float) -> QuantumSpectrum:
    """Roots of det(I - e^(ikL) S) in (0, cutoff], plus k = 0.

    Grid step is pi / (8 ell_tot): the total eigenphase flux per step is
    pi/4, so no zero crossing fits between adjacent nodes.  The found
    count must match the mean-density estimate cutoff * ell_tot / pi to
    within V, the provable fluctuation bound.
    """
    if not cutoff_k > 0:
        raise ValueError(f"cutoff must be positive, got {cutoff_k}")
    lengths, s = _bond_system(mg)
    ell_tot = mg.total_length

    def f_abs(k: float) -> float:
        n = len(lengths)
        return abs(np.linalg.det(np.eye(n) - _secular_matrix(k, lengths, s)))

    step = math.pi / (8.0 * ell_tot)
    # Extend two steps past the cutoff so minima at the boundary stay interior.
    n_steps = int(math.ceil(cutoff_k / step)) + 2
    grid = [step * (i + 1) for i in range(n_steps)]
    values = [f_abs(k) for k in grid]

    roots: list[tuple[float, int]] = []
    for i in range(1, len(grid) - 1):
        if values[i] <= values[i - 1] and values[i] <= values[i + 1]:
            k_star = _refine_minimum(f_abs, grid[i - 1], grid[i + 1])
            mult = _multiplicity_at(k_star, lengths, s)
            if mult == 0:
                continue
            if roots and abs(k_star - roots[-1][0]) < 1e-8:
                continue
            if k_star <= cutoff_k * (1.0 + 1e-12):
                roots.append((k_star, mult))

    ks = [0.0]
    for k_star, mult in roots:
        ks.extend([k_star] * mult)
    found = len(ks)
    weyl = cutoff_k * ell_tot / math.pi
    if abs(found - weyl) > mg.graph.vertex_count:
        raise GridTooCoarse(
            f"found {found} eigenvalues below {cutoff_k} against mean-density "
            f"estimate {weyl:.3f}"
        )
    return QuantumSpectrum(tuple(ks), cutoff_k, SpectrumSource.SECULAR_SOLVER)
