"""Command-line interface.

Four subcommands: ``bounds`` prints the zero-free radii for a graph or
a degree, ``table`` emits the comparison table of the three bound
families, ``verify`` runs the identity checks on one graph and exits
nonzero if any fails, and ``series`` prints rooted-tree series
coefficients with the radius and optional saturation threshold.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import math
import os
import sys
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from pathlib import Path

from .bounds import (
    complete_graph_bound,
    constants,
    cstar_delta,
    cstar_graph,
    cstar_graph_series,
    sokal_bound,
    verify_zero_free,
)
from .chromatic import chromatic_polynomial
from .errors import ChromaboundError
from .graphs import Graph, generate_graph, neighborhood_profile, parse_graph
from .polynomial import IntPolynomial
from .polymer import (
    check_fp_condition,
    hardcore_partition,
    penrose_report,
    spanning_tree_count,
    verify_cn_bound,
)
from .series import series_radius, solve_tree_series, sup_x_threshold, t_n_delta

_FORMAT_ENV = "CHROMABOUND_FORMAT"
_FORMATS = ("json", "csv", "text")
_TREE_CENSUS_CAP = 500_000
_PARTITION_CAP = 8
_PARTITION_POINTS = (2, 3, 5, 10)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (ChromaboundError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromabound",
        description="Zero-free disk bounds for chromatic polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser(
        "bounds", help="bound report for a graph, or the degree-only pair"
    )
    _add_graph_flags(p_bounds)
    _add_common_flags(p_bounds)
    p_bounds.set_defaults(func=_cmd_bounds)

    p_table = sub.add_parser(
        "table", help="comparison table over degrees 2, 3, 4, 6"
    )
    _add_common_flags(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser(
        "verify", help="identity checks for one graph; exit 0 iff all pass"
    )
    _add_graph_flags(p_verify)
    _add_common_flags(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_series = sub.add_parser(
        "series", help="rooted-tree series coefficients and thresholds"
    )
    _add_graph_flags(p_series)
    _add_common_flags(p_series)
    p_series.set_defaults(func=_cmd_series)

    return parser


def _add_graph_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", metavar="FILE", help="read the graph from FILE")
    p.add_argument(
        "--family",
        help="generate a graph: complete, cycle, path, star, grid, petersen, random-regular",
    )
    p.add_argument("--n", type=int, help="vertex count for generated families")
    p.add_argument("--seed", type=int, help="seed for randomized families")


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delta", type=int, help="maximum degree for degree-only modes")
    p.add_argument("--order", type=int, help="series truncation order")
    p.add_argument("--q", type=float, help="evaluation point for activity checks")
    p.add_argument("--a", type=float, help="convergence-check parameter")
    p.add_argument("--b", type=float, help="saturation level for the series threshold")
    p.add_argument("--tol", type=float, default=1e-8, help="root residual tolerance")
    p.add_argument(
        "--max-vertices", type=int, default=18, help="polynomial-computation cap"
    )
    p.add_argument("--format", choices=_FORMATS, help="output format")


def _resolve_format(args, default: str, parser) -> str:
    fmt = args.format or os.environ.get(_FORMAT_ENV) or default
    if fmt not in _FORMATS:
        parser.error(
            f"unknown output format {fmt!r} (check the {_FORMAT_ENV} environment variable)"
        )
    return fmt


def _has_graph_source(args) -> bool:
    return args.graph is not None or args.family is not None


def _resolve_graph(args, parser) -> Graph:
    if args.graph is not None and args.family is not None:
        parser.error("give either --graph or --family, not both")
    if args.graph is not None:
        text = Path(args.graph).read_text()
        lines = (line.strip().lower() for line in text.splitlines())
        fmt = "dimacs" if any(line.startswith("p ") for line in lines) else "edge-list"
        return parse_graph(text, fmt)
    kwargs = {}
    if args.n is not None:
        kwargs["n"] = args.n
    if args.seed is not None:
        kwargs["seed"] = args.seed
    if args.family.lower().replace("_", "-") == "random-regular":
        kwargs["degree"] = args.delta if args.delta is not None else 3
    return generate_graph(args.family, **kwargs)


def _graph_label(args, g: Graph) -> str:
    if args.family is not None:
        return args.family if args.n is None else f"{args.family}-{args.n}"
    return Path(args.graph).stem


def _round2(x: float) -> str:
    return str(Decimal(repr(float(x))).quantize(Decimal("0.01"), ROUND_HALF_UP))


def _emit_csv_rows(rows: list[dict]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    if not rows:
        return
    keys = list(rows[0])
    writer.writerow(keys)
    for row in rows:
        writer.writerow([row[k] for k in keys])


def _scalar_row(payload: dict) -> dict:
    return {
        k: v for k, v in payload.items() if not isinstance(v, (dict, list))
    }


def _emit_kv_text(payload: dict) -> None:
    for k, v in payload.items():
        if isinstance(v, (dict, list)):
            print(f"{k}: {json.dumps(v)}")
        else:
            print(f"{k}: {v}")


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def _cmd_bounds(args, parser) -> int:
    fmt = _resolve_format(args, "json", parser)
    if not _has_graph_source(args):
        if args.delta is None:
            parser.error("bounds needs --delta or a graph source (--graph/--family)")
        if args.delta < 2:
            parser.error("--delta must be at least 2")
        s = sokal_bound(args.delta)
        c = cstar_delta(args.delta)
        payload = {
            "delta": args.delta,
            "c_sokal": s.value,
            "c_star_delta": c.value,
            "c_sokal_rounded": _round2(s.value),
            "c_star_delta_rounded": _round2(c.value),
        }
    else:
        g = _resolve_graph(args, parser)
        report = cstar_graph(g)
        report = dataclasses.replace(report, graph_id=_graph_label(args, g))
        if args.order is not None:
            report = dataclasses.replace(
                report, c_star_graph_series=cstar_graph_series(g, args.order)
            )
        payload = report.to_json()
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        _emit_csv_rows([_scalar_row(payload)])
    else:
        _emit_kv_text(payload)
    return 0


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _cmd_table(args, parser) -> int:
    fmt = _resolve_format(args, "csv", parser)
    rows = []
    for d in (2, 3, 4, 6):
        rows.append(
            {
                "delta": d,
                "sokal": _round2(sokal_bound(d).value),
                "cstar_delta": _round2(cstar_delta(d).value),
                "cstar_complete": _round2(complete_graph_bound(d)),
                "exact": str(d),
            }
        )
    cs = constants()
    limit_ratio = 1.0 / (3.0 - 2.0 * math.sqrt(2.0))
    rows.append(
        {
            "delta": "any",
            "sokal": f"{_round2(cs['K'])}*delta",
            "cstar_delta": f"{_round2(cs['K_star'])}*delta",
            "cstar_complete": f"{_round2(limit_ratio)}*delta",
            "exact": "delta",
        }
    )
    if fmt == "json":
        print(json.dumps(rows, indent=2))
    elif fmt == "csv":
        _emit_csv_rows(rows)
    else:
        widths = {k: max(len(str(r[k])) for r in rows + [dict.fromkeys(rows[0], k)]) for k in rows[0]}
        header = "  ".join(k.ljust(widths[k]) for k in rows[0])
        print(header)
        for r in rows:
            print("  ".join(str(r[k]).ljust(widths[k]) for k in r))
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cmd_verify(args, parser) -> int:
    fmt = _resolve_format(args, "json", parser)
    if not _has_graph_source(args):
        parser.error("verify needs a graph source (--graph/--family)")
    g = _resolve_graph(args, parser)
    checks: list[dict] = []

    def record(name: str, status: str, detail: str) -> None:
        checks.append({"name": name, "status": status, "detail": detail})

    tree_estimate = spanning_tree_count(g)
    if tree_estimate > _TREE_CENSUS_CAP:
        record(
            "penrose-identity",
            "SKIP",
            f"about {tree_estimate} spanning trees, census cap is {_TREE_CENSUS_CAP}",
        )
    else:
        rep = penrose_report(g)
        sign = -1 if (g.n - 1) % 2 else 1
        ok = rep.s_value == sign * rep.penrose_count
        record(
            "penrose-identity",
            "PASS" if ok else "FAIL",
            f"S={rep.s_value}, trees={rep.tree_count}, "
            f"penrose={rep.penrose_count}, weak={rep.weak_penrose_count}",
        )

    if g.n > _PARTITION_CAP:
        record(
            "partition-identity",
            "SKIP",
            f"{g.n} vertices exceed the exact-arithmetic cap of {_PARTITION_CAP}",
        )
    else:
        p = chromatic_polynomial(g)
        bad = [
            q
            for q in _PARTITION_POINTS
            if Fraction(q) ** g.n * hardcore_partition(g, q) != p(q)
        ]
        record(
            "partition-identity",
            "PASS" if not bad else "FAIL",
            f"checked q in {_PARTITION_POINTS}"
            + (f", mismatch at {bad}" if bad else ""),
        )

    if g.m == 0 or g.n < 2:
        record("activity-bound", "SKIP", "no monomers in an edgeless graph")
    else:
        q_eval = args.q if args.q is not None else 10.0
        top = min(5, g.n)
        bad = [
            n for n in range(2, top + 1) if not verify_cn_bound(g, n, q_eval).holds
        ]
        record(
            "activity-bound",
            "PASS" if not bad else "FAIL",
            f"sizes 2..{top} at q={q_eval}" + (f", exceeded at {bad}" if bad else ""),
        )

    if args.a is not None:
        fp = check_fp_condition(
            g, args.q if args.q is not None else 10.0, args.a, args.order or 16
        )
        record(
            "fp-condition",
            "PASS" if fp.status == "satisfied" else "FAIL",
            f"status={fp.status}, head={fp.head:.6g}, threshold={fp.threshold:.6g}",
        )

    try:
        zrep = verify_zero_free(g, tol=args.tol, max_vertices=args.max_vertices)
        reference = (
            zrep.c_star_graph if zrep.c_star_graph is not None else zrep.c_star_delta
        )
        record(
            "zero-free",
            "PASS" if zrep.zero_free_verified else "FAIL",
            f"max root modulus {zrep.max_root_modulus:.6g} vs bound {reference:.6g}",
        )
    except ChromaboundError as exc:
        record("zero-free", "FAIL", str(exc))

    ok = all(c["status"] != "FAIL" for c in checks)
    payload = {"graph_id": _graph_label(args, g), "ok": ok, "checks": checks}
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        _emit_csv_rows(checks)
    else:
        for c in checks:
            print(f"{c['name']}: {c['status']} ({c['detail']})")
        print(f"result: {'ok' if ok else 'failed'}")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------

def _cmd_series(args, parser) -> int:
    fmt = _resolve_format(args, "json", parser)
    order = args.order if args.order is not None else 10
    if order < 1:
        parser.error("--order must be at least 1")
    if _has_graph_source(args):
        g = _resolve_graph(args, parser)
        prof = neighborhood_profile(g)
        z = prof.z_polynomial()
        zt = prof.z_tilde_polynomial()
        _, series = solve_tree_series(zt, z, order)
        source = _graph_label(args, g)
    else:
        if args.delta is None:
            parser.error("series needs --delta or a graph source (--graph/--family)")
        if args.delta < 1:
            parser.error("--delta must be at least 1")
        series = t_n_delta(args.delta, order)
        one_plus = IntPolynomial([1, 1])
        z = one_plus ** args.delta
        zt = one_plus ** (args.delta - 1)
        source = f"delta-{args.delta}"
    radius, u0 = series_radius(zt)
    payload = {
        "source": source,
        "order": order,
        "coefficients": [str(c) for c in series.coefficients],
        "radius": radius if math.isfinite(radius) else "inf",
        "radius_argmax": u0 if math.isfinite(u0) else "inf",
        "b": args.b,
        "threshold_x": sup_x_threshold(args.b, z, zt) if args.b is not None else None,
    }
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        _emit_csv_rows(
            [
                {"n": i + 1, "coefficient": c}
                for i, c in enumerate(payload["coefficients"])
            ]
        )
    else:
        _emit_kv_text(payload)
    return 0
