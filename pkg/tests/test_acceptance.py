"""Acceptance suite: each test runs one release criterion end to end at its
stated tolerance and prints a PASS line on success (pytest shows the line
with -s / -rA; a failure prints nothing and fails the test)."""

import math
import time

import pytest

from qgdet import (
    attach_lengths,
    count_brute_force,
    det_drift,
    det_prime_equilateral,
    det_prime_friedlander,
    det_prime_from_zeta,
    eigenvalue_drift,
    enumerate_equilateral,
    equilateral,
    mckay_lower,
    norm_bound,
    product_difference_bound,
    secular_solve,
    threshold_delta,
    tree_estimator,
    upper_bounds,
    zeta_direct_sum,
    zeta_hurwitz,
)
from qgdet.cli import main
from qgdet.errors import DeltaTooLarge
from qgdet.fixtures import (
    complete_bipartite,
    cycle_graph,
    graph_catalog,
    make_rng,
    path_graph,
    random_connected_graph,
    random_lengths,
    star_graph,
)
from qgdet.trees import all_methods


def _ok(line):
    print(f"ACCEPTANCE PASS: {line}")


def test_criterion_1_kirchhoff_consistency_catalog():
    """All four counting routes agree on every connected graph with V <= 7."""
    start = time.monotonic()
    catalog = graph_catalog(7)
    assert len(catalog) == 1 + 2 + 6 + 21 + 112 + 853
    for g in catalog:
        counts = set(all_methods(g).values())
        assert len(counts) == 1, (g.vertex_count, g.edges)
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    _ok(f"criterion 1: tree counts agree on all {len(catalog)} graphs, {elapsed:.1f}s")


def test_criterion_2_complete_bipartite_determinant():
    """Equilateral determinant of K(m,p) equals 2^(mp) ell^(mp-m-p+2)."""
    for m, p in [(1, 3), (2, 4), (3, 3)]:
        for ell in (0.5, 1.0, 2.0):
            got = det_prime_equilateral(complete_bipartite(m, p), ell).value
            expected = 2.0 ** (m * p) * ell ** (m * p - m - p + 2)
            assert abs(got - expected) <= 1e-9 * expected
    _ok("criterion 2: K(m,p) closed form reproduced at 1e-9 relative")


def test_criterion_3_star_generic_determinant():
    """Generic-route determinant of a star equals (2^E / E) sum of lengths."""
    rng = make_rng(1003)
    for e in range(2, 7):
        for _ in range(20):
            lengths = random_lengths(rng, e, 1.0, 2.0)
            got = det_prime_friedlander(attach_lengths(star_graph(e), lengths)).value
            expected = 2.0**e / e * sum(lengths)
            assert abs(got - expected) <= 1e-9 * expected
    _ok("criterion 3: star generic determinant matches at 1e-9 relative")


def test_criterion_4_equilateral_tree_recovery():
    """Rounded (prod d / (E 2^E ell^(beta+1))) det' recovers the count."""
    rng = make_rng(1004)
    for _ in range(200):
        g = random_connected_graph(rng, 8)
        truth = count_brute_force(g).count
        for ell in (0.5, 1.0, math.e):
            det = det_prime_equilateral(g, ell).value
            t = g.degree_product() / (g.edge_count * 2.0**g.edge_count * ell ** (g.betti + 1)) * det
            assert round(t) == truth
    _ok("criterion 4: 200 random graphs recovered exactly at three lengths")


def test_criterion_5_generic_tree_recovery():
    """Certified spread windows recover the count in every trial, and the
    estimator drift stays below (delta/ell) V^V 2^(E+V-1) sqrt(2EV)."""
    rng = make_rng(1005)
    for _ in range(500):
        g = random_connected_graph(rng, 6)
        ell = 0.5 + 1.5 * rng.random()
        delta = 0.9 * threshold_delta(g, ell)
        mg = attach_lengths(g, random_lengths(rng, g.edge_count, ell, ell + delta))
        est = tree_estimator(mg)
        truth = count_brute_force(g).count
        assert est.nearest == truth
        assert est.spread_ok
        v, e = g.vertex_count, g.edge_count
        cap = delta / ell * float(v) ** v * 2.0 ** (e + v - 1) * math.sqrt(2 * e * v)
        assert abs(est.t_gamma - truth) < cap
    _ok("criterion 5: 500/500 certified recoveries with drift inside the bound")


def test_criterion_6_zeta_cross_check():
    """Formula and direct-sum zeta agree within the tail bound; the zeta
    continuation reproduces the equilateral determinant at 1e-10."""
    graphs = [path_graph(2), star_graph(3), cycle_graph(3), complete_bipartite(2, 4)]
    for g in graphs:
        for ell in (1.0, math.pi):
            for s in (1.5, 2.0, 3.0):
                hur = zeta_hurwitz(g, ell, s).value
                direct = zeta_direct_sum(g, ell, s, 60.0 / ell)
                assert abs(hur - direct.value) <= direct.tail_bound
            via_zeta = det_prime_from_zeta(g, ell)
            closed = det_prime_equilateral(g, ell).value
            assert abs(via_zeta - closed) <= 1e-10 * closed
    _ok("criterion 6: zeta routes agree and exp(-Z'(0)) matches at 1e-10")


def test_criterion_7_spectrum_oracle():
    """Enumerated and secular spectra are the same multiset below 15/ell;
    the single interval gives the integer spectrum, confirming the
    beta - 1 = -1 lattice cancellation."""
    for g, ell in [
        (path_graph(2), 1.0),
        (cycle_graph(3), 1.0),
        (star_graph(3), 1.0),
        (complete_bipartite(2, 4), 1.0),
        (path_graph(2), math.pi),
    ]:
        cutoff = 15.0 / ell
        enum = enumerate_equilateral(g, ell, cutoff)
        sec = secular_solve(equilateral(g, ell), cutoff)
        assert len(enum.ks) == len(sec.ks)
        for a, b in zip(enum.ks, sec.ks):
            assert abs(a - b) <= 1e-7
    interval = enumerate_equilateral(path_graph(2), math.pi, 15.0 / math.pi)
    assert list(interval.ks) == pytest.approx(list(range(5)), abs=1e-12)
    _ok("criterion 7: oracle spectra identical below 15/ell on all fixtures")


def test_criterion_8_bounds_suite():
    """Every inequality holds on 500 random instances; the product
    difference self-test gives 36 < 96 exactly."""
    self_test = product_difference_bound([2.0, 3.0, 4.0], 1.0)
    assert self_test.lhs == 36.0 and self_test.rhs == 96.0 and self_test.holds
    rng = make_rng(1008)
    guarded = 0
    for _ in range(500):
        g = random_connected_graph(rng, 10, max_edges=20)
        ell = 0.5 + 1.5 * rng.random()
        delta = ell * (1e-4 + 0.05 * rng.random())
        mg = attach_lengths(g, random_lengths(rng, g.edge_count, ell, ell + delta))
        assert norm_bound(mg, ell, delta).holds
        assert all(r.holds for r in eigenvalue_drift(mg, ell, delta))
        assert mckay_lower(g).holds
        assert all(r.holds for r in upper_bounds(g))
        try:
            assert det_drift(mg, ell, delta).holds
            guarded += 1
        except DeltaTooLarge:
            pass
    _ok(f"criterion 8: 500/500 bound instances hold ({guarded} det_drift guarded)")


def test_criterion_9_verify_determinism(capsys):
    """The verify command is byte-identical across runs of one seed."""
    args = ["verify", "--seed", "42", "--trials", "50", "--max-v", "7", "--json"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    _ok("criterion 9: verify output byte-identical across runs")
