"""Perturbation and spectral inequality predicates."""

import math

import pytest
from numpy.testing import assert_allclose

from qgdet import (
    anderson_morley_improves,
    attach_lengths,
    det_drift,
    eigenvalue_drift,
    equilateral,
    mckay_lower,
    norm_bound,
    product_difference_bound,
    relaxed_threshold,
    threshold_delta,
    upper_bounds,
)
from qgdet.errors import DeltaTooLarge, LengthsOutOfWindow, NotApplicable
from qgdet.fixtures import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    make_rng,
    path_graph,
    random_connected_graph,
    random_lengths,
    star_graph,
)


def _star_window(a, b):
    return attach_lengths(star_graph(2), {(0, 1): a, (0, 2): b})


def test_norm_bound_equilateral_is_zero():
    rep = norm_bound(equilateral(cycle_graph(4), 1.0), 1.0, 0.1)
    assert rep.lhs == 0.0
    assert rep.holds and rep.strict


def test_norm_bound_two_edge_star_hand_value():
    # only the long edge perturbs: ||diff|| = 2 (1 - 1/1.1)
    rep = norm_bound(_star_window(1.0, 1.1), 1.0, 0.2)
    assert_allclose(rep.lhs, 2 * (1 - 1 / 1.1), rtol=1e-12)
    assert rep.rhs == pytest.approx(0.2 * math.sqrt(2 * 2 * 3), rel=1e-12)
    assert rep.intermediate_rhs == pytest.approx(0.2 * math.sqrt(2 * 2 * 3), rel=1e-12)
    assert rep.lhs < rep.intermediate_rhs <= rep.rhs
    assert rep.holds


def test_norm_bound_window_validation():
    with pytest.raises(LengthsOutOfWindow):
        norm_bound(_star_window(1.0, 1.3), 1.0, 0.2)
    with pytest.raises(LengthsOutOfWindow):
        norm_bound(_star_window(0.9, 1.1), 1.0, 0.2)
    with pytest.raises(LengthsOutOfWindow):
        norm_bound(equilateral(path_graph(2), 1.0), 1.0, 0.0)


def test_eigenvalue_drift_equilateral_all_zero():
    reports = eigenvalue_drift(equilateral(cycle_graph(4), 1.0), 1.0, 0.1)
    assert all(r.lhs == 0.0 and r.holds for r in reports)


def test_eigenvalue_drift_star():
    reports = eigenvalue_drift(_star_window(1.0, 1.1), 1.0, 0.2)
    assert len(reports) == 3
    assert all(r.holds for r in reports)
    assert reports[0].lhs < 1e-12  # both zero modes, up to solver noise


def test_det_drift_equilateral():
    rep = det_drift(equilateral(cycle_graph(4), 1.0), 1.0, 0.01)
    assert rep.lhs == 0.0 and rep.holds


def test_det_drift_small_star_window():
    rep = det_drift(_star_window(1.0, 1.01), 1.0, 0.02)
    assert rep.holds
    assert rep.slack > 10 * rep.lhs  # wide margin


def test_det_drift_guard():
    with pytest.raises(DeltaTooLarge):
        det_drift(_star_window(1.0, 1.9), 1.0, 0.95)


def test_product_difference_self_test():
    rep = product_difference_bound([2.0, 3.0, 4.0], 1.0)
    assert rep.lhs == 36.0
    assert rep.rhs == 96.0
    assert rep.holds
    with pytest.raises(ValueError):
        product_difference_bound([2.0, 3.0], 2.5)


def test_mckay_fixtures():
    p2 = mckay_lower(path_graph(2))
    assert p2.lhs == pytest.approx(2.0) and p2.holds  # equality case
    c3 = mckay_lower(cycle_graph(3))
    assert c3.lhs == pytest.approx(4.0 / 3) and c3.rhs == pytest.approx(3.0)
    p4 = mckay_lower(path_graph(4))
    assert p4.lhs == pytest.approx(1.0 / 3)
    assert p4.rhs == pytest.approx(2 - math.sqrt(2), rel=1e-10)
    assert p4.holds


def test_upper_bounds_fixtures():
    k24 = upper_bounds(complete_bipartite(2, 4))
    assert all(r.holds for r in k24)
    assert k24[0].rhs == 6.0 and k24[0].lhs == pytest.approx(6.0)
    assert not anderson_morley_improves(complete_bipartite(2, 4))

    k4 = upper_bounds(complete_graph(4))
    assert k4[0].lhs == pytest.approx(4.0) and all(r.holds for r in k4)

    assert anderson_morley_improves(path_graph(5))  # max degree sum 4 < 5


def test_relaxed_threshold():
    p5 = path_graph(5)
    assert relaxed_threshold(p5, 1.0) > threshold_delta(p5, 1.0)
    assert relaxed_threshold(p5, 2.0) == pytest.approx(2 * relaxed_threshold(p5, 1.0))
    with pytest.raises(NotApplicable):
        relaxed_threshold(complete_bipartite(2, 4), 1.0)
    with pytest.raises(NotApplicable):
        relaxed_threshold(star_graph(4), 1.0)


def test_norm_dominates_max_drift():
    # the computed norm is itself an upper bound for every drift entry
    rng = make_rng(51)
    for _ in range(50):
        g = random_connected_graph(rng, 9)
        ell = 0.5 + rng.random()
        delta = ell * (0.001 + 0.05 * rng.random())
        mg = attach_lengths(g, random_lengths(rng, g.edge_count, ell, ell + delta))
        reports = eigenvalue_drift(mg, ell, delta)
        norm = reports[0].rhs
        assert max(r.lhs for r in reports) <= norm + 1e-12


def test_all_bounds_hold_randomized():
    rng = make_rng(52)
    guarded = 0
    for _ in range(150):
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
    assert guarded > 100  # the sampling keeps most windows inside the guard
