"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error (e.g. an invalid
signature), 3 internal inconsistency between the case table and the numeric
classification.  The ORBIGEO_TOL environment variable overrides the default
classification tolerance of 1e-9.
"""

from __future__ import annotations

import argparse
import os
import sys

from .classify import InconsistentClassification, classify_all
from .halfplane import CLASSIFY_TOL, NoCrossing, NotHyperbolic
from .render import render_domain
from .report import csv_document, document, provenance
from .search import (
    gamma_star_search,
    global_min_figure8,
    min_figure8,
    minimal_nonsimple_summary,
)
from .selfint import self_intersection_count
from .triangle import (
    InvalidSignature,
    LambdaUndefined,
    MatricesUnavailable,
    TriangleSignature,
    build_group,
    lambda_and_E,
    orbifold_area,
    pair_trace,
)
from .words import backend_name
from .halfplane import translation_length, classify_trace


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _tol():
    raw = os.environ.get("ORBIGEO_TOL")
    if raw is None:
        return CLASSIFY_TOL
    return float(raw)


def _isometry_payload(iso):
    out = {"kind": iso.kind, "trace_abs": iso.trace_abs}
    if iso.translation_length is not None:
        out["length"] = iso.translation_length
    if iso.order is not None:
        out["order"] = iso.order
    return out


def _descriptor_payload(desc):
    out = {"kind": desc.kind}
    if desc.order is not None:
        out["order"] = "inf" if desc.order == float("inf") else int(desc.order)
    if desc.bounds is not None:
        out["bounds"] = [
            "inf" if b == float("inf") else int(b) for b in desc.bounds
        ]
    if desc.reversed_orientation:
        out["reversed_orientation"] = True
    return out


def _record_payload(rec):
    return {
        "word": rec.word,
        "isometry": _isometry_payload(rec.isometry),
        "descriptor": _descriptor_payload(rec.descriptor),
        "trace_abs": rec.trace_abs,
        "length": rec.length,
        "geodesic_key": rec.geodesic_key,
        "shared_with": list(rec.shared_with),
    }


def _extremal_payload(res):
    if res is None:
        return None
    return {
        "signature": str(res.signature),
        "word": res.word,
        "trace_abs": res.trace_abs,
        "length": res.length,
        "puncture_count": res.puncture_count,
        "unique": res.unique,
        "n_minimizers": res.n_minimizers,
        "runner_up": None
        if res.runner_up is None
        else {
            "signature": str(res.runner_up[0]),
            "word": res.runner_up[1],
            "trace_abs": res.runner_up[2],
        },
        "cutoff": res.cutoff,
    }


def _cmd_classify(args, tol):
    sig = TriangleSignature.parse(args.sig)
    records = classify_all(sig, tol)
    payload = {
        "signature": str(sig),
        "records": [_record_payload(rec) for rec in records],
    }
    prov = provenance(tolerance=tol, reproducible=args.reproducible)
    sys.stdout.write(document(payload, prov))
    return 0


def _cmd_lambda(args, tol):
    sig = TriangleSignature.parse(args.sig)
    lam, E = lambda_and_E(sig)
    payload = {"signature": str(sig), "lambda": lam, "E": E}
    prov = provenance(tolerance=tol, reproducible=args.reproducible)
    sys.stdout.write(document(payload, prov))
    return 0


def _cmd_length(args, tol):
    sig = TriangleSignature.parse(args.sig)
    trace = pair_trace(sig, args.word)
    kind = classify_trace(trace, tol)
    payload = {
        "signature": str(sig),
        "word": args.word,
        "trace_abs": trace,
        "kind": kind,
        "length": translation_length(trace) if kind == "hyperbolic" else None,
    }
    prov = provenance(tolerance=tol, reproducible=args.reproducible)
    sys.stdout.write(document(payload, prov))
    return 0


def _cmd_selfint(args, tol):
    sig = TriangleSignature.parse(args.sig)
    group = build_group(sig)
    g = group.pair_element(args.word)
    result = self_intersection_count(group, g, budget=args.budget)
    payload = {
        "signature": str(sig),
        "word": args.word,
        "count": result.count,
        "budget": result.budget,
        "stability": {
            "budgets": list(result.budgets),
            "counts": list(result.counts),
            "stable": result.stable,
        },
        "crossing_axes": result.crossing_axes,
    }
    prov = provenance(
        tolerance=tol,
        reproducible=args.reproducible,
        word_budget=args.budget,
        backend=backend_name(),
    )
    sys.stdout.write(document(payload, prov))
    return 0


def _cmd_search(args, tol):
    if args.punctures == "all":
        res = global_min_figure8(cutoff=args.cutoff)
    else:
        res = min_figure8(int(args.punctures), cutoff=args.cutoff)
    payload = {"punctures": args.punctures, "result": _extremal_payload(res)}
    prov = provenance(tolerance=tol, reproducible=args.reproducible, cutoff=args.cutoff)
    sys.stdout.write(document(payload, prov))
    return 0


def _cmd_gamma_star(args, tol):
    res = gamma_star_search(budget=args.budget)
    payload = {
        "found": res is not None,
    }
    if res is not None:
        payload.update(
            {
                "word": str(res.word),
                "trace_abs": res.trace_abs,
                "length": res.length,
                "axis_endpoints": list(res.axis_endpoints),
                "order2_point_distance": res.point_distance,
            }
        )
    prov = provenance(
        tolerance=tol, reproducible=args.reproducible, word_budget=args.budget
    )
    sys.stdout.write(document(payload, prov))
    return 0


def _cmd_table1(args, tol):
    rows = minimal_nonsimple_summary(cutoff=args.cutoff)
    prov = provenance(tolerance=tol, reproducible=args.reproducible, cutoff=args.cutoff)
    if args.csv:
        header = (
            "classification",
            "closed_geodesic",
            "trace_abs",
            "hyperbolic_length",
            "orbifold",
            "orbifold_area",
        )
        table = [
            (row.classification, row.geodesic, row.trace_abs, row.length,
             row.orbifold, row.area)
            for row in rows
        ]
        text = csv_document(header, table, prov)
        with open(args.csv, "w", newline="") as handle:
            handle.write(text)
        sys.stdout.write(f"wrote {args.csv}\n")
        return 0
    payload = {
        "rows": [
            {
                "classification": row.classification,
                "closed_geodesic": row.geodesic,
                "trace_abs": row.trace_abs,
                "hyperbolic_length": row.length,
                "orbifold": row.orbifold,
                "orbifold_area": row.area,
            }
            for row in rows
        ]
    }
    sys.stdout.write(document(payload, prov))
    return 0


def _cmd_render(args, tol):
    sig = TriangleSignature.parse(args.sig)
    prov = provenance(tolerance=tol, reproducible=args.reproducible)
    svg = render_domain(sig, axis_word=args.axis, prov=prov)
    with open(args.out, "w") as handle:
        handle.write(svg)
    sys.stdout.write(f"wrote {args.out}\n")
    return 0


def _cmd_area(args, tol):
    sig = TriangleSignature.parse(args.sig)
    payload = {"signature": str(sig), "area": orbifold_area(sig)}
    prov = provenance(tolerance=tol, reproducible=args.reproducible)
    sys.stdout.write(document(payload, prov))
    return 0


def build_parser():
    parser = _Parser(prog="orbigeo", description=__doc__)
    parser.add_argument(
        "--reproducible",
        action="store_true",
        help="omit timestamps so identical invocations give identical bytes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify ba, bc, ac for a signature")
    p.add_argument("--sig", required=True, help="signature p,q,r ('inf' allowed)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("lambda", help="normalization scale and its cosine term")
    p.add_argument("--sig", required=True)
    p.set_defaults(func=_cmd_lambda)

    p = sub.add_parser("length", help="|trace| and geodesic length of a pair element")
    p.add_argument("--sig", required=True)
    p.add_argument("--word", required=True, choices=("ba", "bc", "ac"))
    p.set_defaults(func=_cmd_length)

    p = sub.add_parser("selfint", help="self-intersection count by enumeration")
    p.add_argument("--sig", required=True)
    p.add_argument("--word", required=True, choices=("ba", "bc", "ac"))
    p.add_argument("--budget", type=int, default=8, help="word-length budget")
    p.set_defaults(func=_cmd_selfint)

    p = sub.add_parser("search", help="shortest figure-eight geodesic search")
    p.add_argument(
        "--punctures", required=True, choices=("0", "1", "2", "3", "all")
    )
    p.add_argument("--cutoff", type=int, default=8)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser(
        "gamma-star", help="search the (2,3,7) group for the shortest non-simple geodesic"
    )
    p.add_argument("--budget", type=int, default=8)
    p.set_defaults(func=_cmd_gamma_star)

    p = sub.add_parser("table1", help="summary of minimal non-simple geodesics")
    p.add_argument("--csv", help="write CSV to this path instead of JSON")
    p.add_argument("--cutoff", type=int, default=8)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("area", help="orbifold area of a signature")
    p.add_argument("--sig", required=True)
    p.set_defaults(func=_cmd_area)

    p = sub.add_parser("render", help="SVG of the fundamental quadrilateral")
    p.add_argument("--sig", required=True)
    p.add_argument("--axis", choices=("ba", "bc", "ac"))
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 1
    try:
        tol = _tol()
    except ValueError:
        sys.stderr.write("usage error: ORBIGEO_TOL must be a float\n")
        return 1
    try:
        return args.func(args, tol)
    except InconsistentClassification as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        return 3
    except (
        InvalidSignature,
        LambdaUndefined,
        MatricesUnavailable,
        NotHyperbolic,
        NoCrossing,
        ValueError,
    ) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
