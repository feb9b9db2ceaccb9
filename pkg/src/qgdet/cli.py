"""Command-line front end.

Subcommands:

* analyze  -- load a graph file, report structure, determinants, tree
              counts, and the estimator certificate.
* zeta     -- tabulate the spectral zeta function of an equilateral graph
              by both routes.
* verify   -- run the seeded randomized property suites.

Exit codes: 0 success, 1 internal-consistency failure, 2 input error.
JSON output is versioned and serialized with 17-significant-digit floats,
so identical inputs and seeds produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import sys

from . import bounds as bounds_mod
from .errors import NotEquilateral, QGError
from .graphs import MetricGraph, load_graph_file, shape
from .matrices import (
    combinatorial_laplacian,
    det_prime_matrix,
    harmonic_laplacian,
    weighted_r,
)
from .quantum import det_prime_equilateral, det_prime_friedlander, tree_estimator
from .trees import all_methods
from .verify import render_text, run_verification
from .zeta import zeta_direct_sum, zeta_hurwitz

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_INPUT = 2


# -- deterministic JSON with fixed float formatting --------------------------

def _format_float(x: float) -> str:
    return format(x, ".17g")


def _to_json(obj) -> str:
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        escaped = obj.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(obj, dict):
        items = ", ".join(f"{_to_json(str(k))}: {_to_json(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


# -- analyze ------------------------------------------------------------------

def _analysis_report(mg: MetricGraph) -> tuple[dict, bool]:
    g = mg.graph
    sh = shape(g)
    counts = all_methods(g)
    count_values = {m.value: c for m, c in counts.items()}
    consistent = len(set(counts.values())) == 1
    tree_count = next(iter(counts.values()))

    fried = det_prime_friedlander(mg)
    report: dict = {
        "schema": SCHEMA_VERSION,
        "graph": {
            "vertices": g.vertex_count,
            "edges": g.edge_count,
            "betti": sh.betti,
            "diameter": sh.diameter,
            "degrees": list(sh.degree_sequence),
            "equilateral": mg.is_equilateral,
            "lengths": list(mg.lengths),
        },
        "determinants": {
            "combinatorial": det_prime_matrix(combinatorial_laplacian(g)),
            "harmonic": det_prime_matrix(harmonic_laplacian(g)),
            "weighted": det_prime_matrix(weighted_r(mg)),
            "quantum_friedlander": fried.value,
        },
        "trees": count_values,
    }
    if mg.is_equilateral:
        closed = det_prime_equilateral(g, mg.lengths[0])
        report["determinants"]["quantum_closed_form"] = closed.value
        rel = abs(fried.value - closed.value) / closed.value
        consistent = consistent and rel <= 1e-9

    estimate = tree_estimator(mg)
    report["estimate"] = {
        "t_gamma": estimate.t_gamma,
        "nearest": estimate.nearest,
        "delta_threshold": estimate.delta_threshold,
        "spread": mg.spread,
        "spread_ok": estimate.spread_ok,
        "relaxed_star_ok": estimate.relaxed_star_ok,
    }
    if mg.is_equilateral or estimate.spread_ok:
        consistent = consistent and estimate.nearest == tree_count

    checks = [bounds_mod.mckay_lower(g)] + bounds_mod.upper_bounds(g)
    report["bounds"] = [
        {"name": r.name, "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds, "slack": r.slack}
        for r in checks
    ]
    consistent = consistent and all(r.holds for r in checks)
    report["consistent"] = consistent
    return report, consistent


def _print_analysis(report: dict) -> None:
    g = report["graph"]
    print(
        f"graph: V={g['vertices']} E={g['edges']} beta={g['betti']} "
        f"diameter={g['diameter']} degrees={g['degrees']}"
    )
    print(f"equilateral: {'yes' if g['equilateral'] else 'no'}")
    d = report["determinants"]
    print(f"det'(L)      = {d['combinatorial']:.12g}")
    print(f"det'(Delta)  = {d['harmonic']:.12g}")
    print(f"det'(R)      = {d['weighted']:.12g}")
    line = f"det'(quantum) = {d['quantum_friedlander']:.12g} (generic route)"
    if "quantum_closed_form" in d:
        line += f" | {d['quantum_closed_form']:.12g} (closed form)"
    print(line)
    trees = ", ".join(f"{k}={v}" for k, v in report["trees"].items())
    print(f"spanning trees: {trees}")
    est = report["estimate"]
    print(
        f"estimator: T={est['t_gamma']:.12g} nearest={est['nearest']} "
        f"spread={est['spread']:.6g} threshold={est['delta_threshold']:.6g} "
        f"certified={'yes' if est['spread_ok'] else 'no'}"
    )
    if est["relaxed_star_ok"] is not None:
        print(f"star relaxed certificate: {'yes' if est['relaxed_star_ok'] else 'no'}")
    for b in report["bounds"]:
        print(f"bound {b['name']}: {'holds' if b['holds'] else 'VIOLATED'} (slack {b['slack']:.6g})")
    print(f"consistency: {'OK' if report['consistent'] else 'FAILED'}")


def _cmd_analyze(args) -> int:
    mg = load_graph_file(args.path, default_length=args.length)
    report, consistent = _analysis_report(mg)
    if args.json:
        print(_to_json(report))
    else:
        _print_analysis(report)
    return EXIT_OK if consistent else EXIT_INCONSISTENT


# -- zeta ---------------------------------------------------------------------

def _cmd_zeta(args) -> int:
    mg = load_graph_file(args.path, default_length=args.length)
    if not mg.is_equilateral:
        raise NotEquilateral("zeta evaluation requires an equilateral graph")
    g = mg.graph
    ell = mg.lengths[0]
    s_values = [float(tok) for tok in args.s.split(",") if tok]
    cutoff = args.cutoff if args.cutoff is not None else 60.0 / ell
    rows = []
    for s in s_values:
        hur = zeta_hurwitz(g, ell, s)
        direct = zeta_direct_sum(g, ell, s, cutoff)
        rows.append(
            {
                "s": s,
                "hurwitz": hur.value,
                "direct_sum": direct.value,
                "tail_bound": direct.tail_bound,
                "agree": abs(hur.value - direct.value) <= direct.tail_bound,
            }
        )
    if args.json:
        print(_to_json({"schema": SCHEMA_VERSION, "cutoff": cutoff, "rows": rows}))
    else:
        print(f"{'s':>6} {'hurwitz':>22} {'direct sum':>22} {'tail bound':>12} agree")
        for r in rows:
            print(
                f"{r['s']:>6g} {r['hurwitz']:>22.15g} {r['direct_sum']:>22.15g} "
                f"{r['tail_bound']:>12.3e} {'yes' if r['agree'] else 'NO'}"
            )
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_INCONSISTENT


# -- verify ---------------------------------------------------------------------

def _cmd_verify(args) -> int:
    summary = run_verification(args.seed, args.trials, args.max_v)
    if args.json:
        print(
            _to_json(
                {
                    "schema": SCHEMA_VERSION,
                    "seed": summary.seed,
                    "trials": summary.trials,
                    "max_vertices": summary.max_vertices,
                    "suites": [
                        {
                            "name": s.name,
                            "passed": s.passed,
                            "failed": s.failed,
                            "notes": list(s.notes),
                        }
                        for s in summary.suites
                    ],
                    "all_pass": summary.all_pass,
                }
            )
        )
    else:
        print(render_text(summary))
    return EXIT_OK if summary.all_pass else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgdet",
        description="Spectral determinants and spanning trees of metric graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full report for one graph file")
    p_analyze.add_argument("path")
    p_analyze.add_argument("--length", type=float, default=None,
                           help="edge length when the file omits lengths")
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_zeta = sub.add_parser("zeta", help="spectral zeta table, both routes")
    p_zeta.add_argument("path")
    p_zeta.add_argument("--s", default="1.5,2,3", help="comma-separated s values, each > 1")
    p_zeta.add_argument("--cutoff", type=float, default=None,
                        help="direct-sum wavenumber cutoff (default 60/ell)")
    p_zeta.add_argument("--length", type=float, default=None)
    p_zeta.add_argument("--json", action="store_true")
    p_zeta.set_defaults(func=_cmd_zeta)

    p_verify = sub.add_parser("verify", help="seeded randomized property suites")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--max-v", type=int, default=7, dest="max_v")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QGError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
