"""Command-line front end: cover reports, orbit listings, searches, cross-checks.

All machine output is JSON (one document for ``describe`` and ``orbit``, one
line per hit for ``search``); ``describe --format cycles`` prints a short
human-readable block instead.  Exit codes: 0 success, 1 failed cross-check,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, report, search, veech
from .cover_params import validate
from .errors import InvalidCoverError
from .spin import SpinParity


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _line(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _validate_or_complain(N, a):
    try:
        return validate(N, a)
    except InvalidCoverError as e:
        print(_line({"error": type(e).__name__, "message": str(e)}))
        return None


def _cycles_text(r: report.CoverReport) -> str:
    lines = [
        f"M_{r.n}({','.join(map(str, r.a))})",
        f"kind: {r.kind.value}",
        f"stratum: {r.stratum}",
        f"genus: {r.genus}" + ("" if r.g_eff is None else f"  (effective genus {r.g_eff})"),
        f"pi_h: {r.pi_h}",
        f"pi_v: {r.pi_v}",
        "cylinders horizontal: " + ", ".join(f"{w}x{h}" for w, h in r.cylinders_horizontal),
        "cylinders vertical:   " + ", ".join(f"{w}x{h}" for w, h in r.cylinders_vertical),
        f"veech index: {r.veech_index} ({r.veech_case}), orbit size {len(r.orbit)}",
    ]
    for label, value in (
        ("sum_abelian", r.sum_abelian),
        ("sum_plus", r.sum_plus),
        ("sum_minus", r.sum_minus),
    ):
        if value is not None:
            lines.append(f"{label}: {value}")
    if r.spin is not SpinParity.UNDEFINED:
        lines.append(f"spin: {r.spin.value}")
    return "\n".join(lines)


def cmd_describe(args) -> int:
    p = _validate_or_complain(args.N, (args.a1, args.a2, args.a3, args.a4))
    if p is None:
        return 2
    r = report.build_report(p, include_marked=args.include_marked)
    if args.format == "cycles":
        print(_cycles_text(r))
    else:
        print(_dump(report.to_jsonable(r)))
    return 0


def cmd_orbit(args) -> int:
    p = _validate_or_complain(args.N, (args.a1, args.a2, args.a3, args.a4))
    if p is None:
        return 2
    d = veech.veech_index(p)
    print(
        _dump(
            {
                "n": p.N,
                "a": list(p.a),
                "veech_index": d.index,
                "veech_case": d.case_label,
                "s3_image_order": d.s3_image_order,
                "orbit": [list(q.a) for q in d.orbit],
            }
        )
    )
    return 0


def cmd_search(args) -> int:
    if args.n_max < 2:
        print(_line({"error": "DegreeTooSmall", "message": f"N_max must be >= 2, got {args.n_max}"}))
        return 2
    kind_filter = "holomorphic" if args.holomorphic else "meromorphic" if args.meromorphic else None
    result = search.run_search(args.n_max, args.filter, kind_filter, args.geff_min)
    for record in search.hit_lines(result):
        print(_line(record))
    return 0


def cmd_check(args) -> int:
    if args.n_max < 2:
        print(_line({"error": "DegreeTooSmall", "message": f"N_max must be >= 2, got {args.n_max}"}))
        return 2
    summary = checks.run_checks(args.n_max, jobs=args.jobs)
    sys.stdout.write(checks.render_summary(summary))
    if summary.ok:
        return 0
    cover, name, message = summary.failures[0]
    print(_line({"cover": cover, "check": name, "message": message}))
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclocover",
        description="Exact combinatorics and Lyapunov exponent sums of square-tiled cyclic covers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    quad = [("N", "cover degree"), ("a1", ""), ("a2", ""), ("a3", ""), ("a4", "")]

    d = sub.add_parser("describe", help="full report for one cover")
    for name, help_text in quad:
        d.add_argument(name, type=int, help=help_text or argparse.SUPPRESS)
    d.add_argument("--format", choices=("json", "cycles"), default="json")
    d.add_argument(
        "--include-marked",
        action="store_true",
        help="list marked points as degree-0 entries of the stratum",
    )
    d.set_defaults(func=cmd_describe)

    o = sub.add_parser("orbit", help="orbit and Veech index of one cover")
    for name, help_text in quad:
        o.add_argument(name, type=int, help=help_text or argparse.SUPPRESS)
    o.set_defaults(func=cmd_orbit)

    s = sub.add_parser("search", help="classify canonical classes up to a degree bound")
    s.add_argument("n_max", type=int)
    s.add_argument("filter", choices=search.FILTERS)
    group = s.add_mutually_exclusive_group()
    group.add_argument("--holomorphic", action="store_true", help="quadratic holomorphic kind only")
    group.add_argument("--meromorphic", action="store_true", help="quadratic meromorphic kind only")
    s.add_argument("--geff-min", type=int, default=None, help="minimum effective genus")
    s.set_defaults(func=cmd_search)

    c = sub.add_parser("check", help="run every cross-validation up to a degree bound")
    c.add_argument("n_max", type=int)
    c.add_argument("--jobs", type=int, default=1, help="worker processes")
    c.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
