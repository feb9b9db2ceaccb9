"""Randomized self-verification suites behind the `verify` CLI command.

Every suite draws from one PCG64 stream in a fixed order, so a seed fully
determines the graphs, the lengths, and therefore the rendered summary.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import (
    det_drift,
    eigenvalue_drift,
    mckay_lower,
    norm_bound,
    upper_bounds,
)
from .errors import DeltaTooLarge
from .fixtures import make_rng, random_connected_graph, random_lengths
from .graphs import attach_lengths
from .quantum import threshold_delta, tree_estimator
from .trees import TreeMethod, all_methods

# Beyond 6 vertices the certified spread drops below float64 resolution,
# so sampled lengths would collapse onto the equilateral point.
MAX_ESTIMATOR_VERTICES = 6


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: int
    failed: int
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class VerificationSummary:
    seed: int
    trials: int
    max_vertices: int
    suites: tuple[SuiteResult, ...] = field(default_factory=tuple)

    @property
    def all_pass(self) -> bool:
        return all(s.failed == 0 for s in self.suites)


def _tree_agreement_suite(rng, trials, max_v) -> SuiteResult:
    passed = failed = 0
    for _ in range(trials):
        g = random_connected_graph(rng, max_v)
        counts = set(all_methods(g).values())
        if len(counts) == 1:
            passed += 1
        else:
            failed += 1
    return SuiteResult("tree_methods_agree", passed, failed)


def _bounds_suite(rng, trials, max_v) -> SuiteResult:
    passed = failed = guarded = 0
    for _ in range(trials):
        g = random_connected_graph(rng, max_v)
        ell = 0.5 + 1.5 * rng.random()
        delta = ell * (1e-4 + rng.random() * 0.05)
        mg = attach_lengths(g, random_lengths(rng, g.edge_count, ell, ell + delta))
        try:
            drift_ok = det_drift(mg, ell, delta).holds
            guarded += 1
        except DeltaTooLarge:
            drift_ok = True  # bound inapplicable, nothing to check
        ok = norm_bound(mg, ell, delta).holds
        ok = ok and all(r.holds for r in eigenvalue_drift(mg, ell, delta))
        ok = ok and mckay_lower(g).holds
        ok = ok and all(r.holds for r in upper_bounds(g))
        ok = ok and drift_ok
        if ok:
            passed += 1
        else:
            failed += 1
    return SuiteResult("spectral_bounds", passed, failed, (f"det_drift guarded in {guarded}",))


def _estimator_suite(rng, trials, max_v) -> SuiteResult:
    passed = failed = 0
    max_v = min(max_v, MAX_ESTIMATOR_VERTICES)
    for _ in range(trials):
        g = random_connected_graph(rng, max_v)
        ell = 0.5 + 1.5 * rng.random()
        delta = 0.9 * threshold_delta(g, ell)
        mg = attach_lengths(g, random_lengths(rng, g.edge_count, ell, ell + delta))
        estimate = tree_estimator(mg)
        truth = all_methods(g)[TreeMethod.BRUTE_FORCE]
        drift_cap = 0.45  # (0.9 threshold / ell) V^V 2^(E+V-1) sqrt(2EV) exactly
        ok = (
            estimate.nearest == truth
            and estimate.spread_ok
            and abs(estimate.t_gamma - truth) < drift_cap
        )
        if ok:
            passed += 1
        else:
            failed += 1
    return SuiteResult("tree_estimator_certified", passed, failed)


def run_verification(seed: int, trials: int, max_vertices: int) -> VerificationSummary:
    rng = make_rng(seed)
    suites = (
        _tree_agreement_suite(rng, trials, max_vertices),
        _bounds_suite(rng, trials, max_vertices),
        _estimator_suite(rng, trials, max_vertices),
    )
    return VerificationSummary(seed, trials, max_vertices, suites)


def render_text(summary: VerificationSummary) -> str:
    lines = [
        f"verification seed={summary.seed} trials={summary.trials} "
        f"max_vertices={summary.max_vertices}"
    ]
    for s in summary.suites:
        note = f" ({'; '.join(s.notes)})" if s.notes else ""
        lines.append(f"{s.name}: {s.passed}/{s.passed + s.failed} pass{note}")
    lines.append(f"result: {'PASS' if summary.all_pass else 'FAIL'}")
    return "\n".join(lines)
