"""Command-line interface.

A thin client over the library: parse arguments, call one operation, print.
Exit codes: 0 success or verification pass, 1 verification counterexample or
data mismatch, 2 usage, parse, or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import counting
from .bfile import diff_series, read_bfile
from .counting import VerificationReport
from .foata import foata_forward, foata_inverse
from .mesh import count_occurrences, named_pattern, occurrences, parse_pattern
from .perms import Permutation


def nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError("value must be >= 0")
    return value


def _series_by_name(which: str, terms: int) -> counting.CoefficientSeries:
    if which == "a2":
        return counting.a2_series(terms)
    if which == "f":
        return counting.f_series(terms)
    return counting.avoider_series(named_pattern("p"), terms)


def render_report(report: VerificationReport) -> str:
    lines = [f"verify {report.title}"]
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(f"  [{status}] {check.name}: {check.detail}")
        if check.counterexample:
            fields = " ".join(f"{key}={value}" for key, value in check.counterexample.items())
            lines.append(f"         counterexample: {fields}")
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines)


def _cmd_foata(args: argparse.Namespace) -> int:
    perm = Permutation.from_text(args.perm)
    image = foata_inverse(perm) if args.inverse else foata_forward(perm)
    print(image.to_text())
    return 0


def _cmd_mesh_count(args: argparse.Namespace) -> int:
    pattern = parse_pattern(args.pattern)
    perm = Permutation.from_text(args.perm)
    print(count_occurrences(pattern, perm))
    return 0


def _cmd_mesh_occurrences(args: argparse.Namespace) -> int:
    pattern = parse_pattern(args.pattern)
    perm = Permutation.from_text(args.perm)
    for occurrence in occurrences(pattern, perm):
        print(",".join(str(i) for i in occurrence))
    return 0


def _cmd_mesh_avoiders(args: argparse.Namespace) -> int:
    pattern = parse_pattern(args.pattern)
    avoiders = counting.avoiding_permutations(pattern, args.n)
    if args.list:
        for perm in avoiders:
            print(perm.to_text())
    else:
        print(len(avoiders))
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    print(_series_by_name(args.which, args.terms).to_text())
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.target == "theorem1":
        report = counting.verify_theorem1(args.max_n)
    else:
        report = counting.verify_conjecture(args.max_n, args.series_terms)
    print(render_report(report))
    return 0 if report.passed else 1


def _cmd_oeis_diff(args: argparse.Namespace) -> int:
    entries = read_bfile(args.bfile)
    series = _series_by_name(args.series, args.terms)
    diff = diff_series(entries, series.coeffs)
    if diff.matches:
        print(f"MATCH over [{diff.lo},{diff.hi}]")
        return 0
    print(
        f"MISMATCH at index {diff.mismatch_index}: "
        f"local {diff.local_value}, b-file {diff.bfile_value}"
    )
    return 1


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclemesh",
        description="Adjacent q-cycle statistics, the fundamental transformation, "
        "mesh-pattern queries, exact series, and exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    foata_p = sub.add_parser("foata", help="apply the fundamental transformation")
    foata_p.add_argument("perm", help="permutation text, e.g. 213967548 or 2,1,3")
    foata_p.add_argument("--inverse", action="store_true", help="apply the inverse map")
    foata_p.set_defaults(func=_cmd_foata)

    mesh_p = sub.add_parser("mesh", help="mesh-pattern queries")
    mesh_sub = mesh_p.add_subparsers(dest="mesh_command", required=True)

    count_p = mesh_sub.add_parser("count", help="count occurrences in a host permutation")
    count_p.add_argument("--pattern", required=True, help="pattern DSL text, e.g. \"s:3\"")
    count_p.add_argument("perm", help="host permutation text")
    count_p.set_defaults(func=_cmd_mesh_count)

    occ_p = mesh_sub.add_parser("occurrences", help="list occurrences, one per line")
    occ_p.add_argument("--pattern", required=True, help="pattern DSL text")
    occ_p.add_argument("perm", help="host permutation text")
    occ_p.set_defaults(func=_cmd_mesh_occurrences)

    avoid_p = mesh_sub.add_parser("avoiders", help="count or list the avoiders in S_n")
    avoid_p.add_argument("--pattern", required=True, help="pattern DSL text")
    avoid_p.add_argument("--n", type=nonnegative_int, required=True, help="permutation size")
    avoid_p.add_argument("--list", action="store_true", help="print the avoiders instead")
    avoid_p.set_defaults(func=_cmd_mesh_avoiders)

    series_p = sub.add_parser("series", help="print a series as 'n<TAB>coefficient' lines")
    series_p.add_argument("which", choices=["a2", "f", "avoiders-p"])
    series_p.add_argument("--terms", type=nonnegative_int, required=True)
    series_p.set_defaults(func=_cmd_series)

    verify_p = sub.add_parser("verify", help="run an exhaustive verification")
    verify_p.add_argument("target", choices=["theorem1", "conjecture"])
    verify_p.add_argument("--max-n", type=nonnegative_int, required=True, dest="max_n")
    verify_p.add_argument(
        "--series-terms", type=nonnegative_int, default=100, dest="series_terms"
    )
    verify_p.set_defaults(func=_cmd_verify)

    diff_p = sub.add_parser("oeis-diff", help="compare a local series against an OEIS b-file")
    diff_p.add_argument("bfile", help="path to the b-file")
    diff_p.add_argument("--series", choices=["a2", "f", "avoiders-p"], default="a2")
    diff_p.add_argument("--terms", type=nonnegative_int, default=50)
    diff_p.set_defaults(func=_cmd_oeis_diff)

    serve_p = sub.add_parser("serve", help="run the HTTP service")
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--port", type=int, default=8000)
    serve_p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
