"""Spectral determinants of the metric-graph Laplacian and the
spanning-tree estimator built from them.

Two routes produce det' of the operator: the equilateral closed form
2^(E-1) ell^(beta+1) det'(Delta), and the generic formula
(2^E ell_tot / V)(prod ell_e / prod d_v) det'(R), which reduces to the
closed form on equal lengths.  The estimator

    T = (prod d_v / (E 2^E ell^(beta+1))) det'

equals the spanning-tree count exactly on equilateral input and stays
within 1/2 of it whenever the length spread delta = max - min satisfies

    delta < ell / (V^V 2^(E+V) sqrt(2 E V)),

with ell the minimum edge length, so lengths lie in [ell, ell + delta].
The estimator always reports the nearest integer, certified or not; the
spread condition is sufficient, not necessary.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .graphs import DiscreteGraph, MetricGraph
from .matrices import (
    det_prime,
    harmonic_laplacian,
    spectrum,
    weighted_r,
)


class DetRoute(enum.Enum):
    EQUILATERAL_CLOSED_FORM = "equilateral_closed_form"
    FRIEDLANDER = "friedlander"


@dataclass(frozen=True)
class DeterminantReport:
    value: float
    route: DetRoute
    vertex_count: int
    edge_count: int
    betti: int
    lengths: tuple[float, ...]


@dataclass(frozen=True)
class TreeEstimate:
    t_gamma: float
    nearest: int
    delta_threshold: float
    spread_ok: bool
    relaxed_star_ok: bool | None


def det_prime_equilateral(g: DiscreteGraph, ell: float) -> DeterminantReport:
    """2^(E-1) ell^(beta+1) det'(Delta)."""
    if not ell > 0:
        raise ValueError(f"edge length must be positive, got {ell}")
    dp = det_prime(spectrum(harmonic_laplacian(g)))
    value = 2.0 ** (g.edge_count - 1) * ell ** (g.betti + 1) * dp
    return DeterminantReport(
        value,
        DetRoute.EQUILATERAL_CLOSED_FORM,
        g.vertex_count,
        g.edge_count,
        g.betti,
        (ell,) * g.edge_count,
    )


def det_prime_friedlander(mg: MetricGraph) -> DeterminantReport:
    """(2^E ell_tot / V)(prod ell_e / prod d_v) det'(R)."""
    g = mg.graph
    dp_r = det_prime(spectrum(weighted_r(mg)))
    value = (
        2.0 ** g.edge_count
        * mg.total_length
        / g.vertex_count
        * mg.length_product()
        / g.degree_product()
        * dp_r
    )
    return DeterminantReport(
        value, DetRoute.FRIEDLANDER, g.vertex_count, g.edge_count, g.betti, mg.lengths
    )


def threshold_delta(g: DiscreteGraph, ell: float) -> float:
    """Spread below which nearest-integer recovery is certified."""
    if not ell > 0:
        raise ValueError(f"edge length must be positive, got {ell}")
    v, e = g.vertex_count, g.edge_count
    return ell / (float(v) ** v * 2.0 ** (e + v) * math.sqrt(2.0 * e * v))


def _round_half_away(x: float) -> int:
    return int(math.floor(x + 0.5) if x >= 0 else math.ceil(x - 0.5))


def tree_estimator(mg: MetricGraph) -> TreeEstimate:
    """Estimate the spanning-tree count from the generic determinant.

    Takes ell as the minimum edge length and delta as the spread, the only
    choice placing every length in [ell, ell + delta].  Rounding never
    errors: the certificate can fail while the nearest integer is still
    correct, since the spread condition is far from sharp.
    """
    g = mg.graph
    ell = mg.min_length
    delta = mg.spread
    det = det_prime_friedlander(mg).value
    t_gamma = (
        g.degree_product()
        / (g.edge_count * 2.0 ** g.edge_count * ell ** (g.betti + 1))
        * det
    )
    thresh = threshold_delta(g, ell)
    relaxed: bool | None = None
    if g.is_star():
        relaxed = delta <= ell / 2.0
    return TreeEstimate(
        t_gamma=t_gamma,
        nearest=_round_half_away(t_gamma),
        delta_threshold=thresh,
        spread_ok=delta < thresh,
        relaxed_star_ok=relaxed,
    )
