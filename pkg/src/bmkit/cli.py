"""Command-line front end: ``bmkit table | verify | oracle | integral``.

Data goes to standard output, diagnostics to standard error. Exit status is
0 when every requested check passes, 1 on a failed check and 2 on invalid
arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from bmkit import core, oracle, quadrature, report
from bmkit.arith import parse_rational
from bmkit.verify import CHECKS, sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def parse_m_range(text: str) -> range:
    """``"N"`` or inclusive ``"lo..hi"``."""
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or lo..hi, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"need 0 <= lo <= hi, got {text!r}")
    return range(lo, hi + 1)


def parse_checks(text: str) -> list[str]:
    names = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in names if c not in CHECKS]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown checks {unknown}; choose from {','.join(CHECKS)}"
        )
    return names


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bmkit", description="Exact Boros-Moll coefficients and their combinatorial model."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("table", help="print coefficient tables")
    p.add_argument("--m", type=parse_m_range, required=True, help="N or lo..hi")
    p.add_argument("--kind", choices=("d", "D"), default="d")
    add_format(p)

    p = sub.add_parser("verify", help="check formulas, recurrences and inequalities")
    p.add_argument("--m", type=parse_m_range, required=True, help="N or lo..hi")
    p.add_argument(
        "--checks", type=parse_checks, default=list(CHECKS), help=",".join(CHECKS)
    )
    add_format(p)

    p = sub.add_parser("oracle", help="verify the permutation model by enumeration")
    p.add_argument("--m", type=parse_m_range, required=True, help="N or lo..hi")
    add_format(p)

    p = sub.add_parser("integral", help="compare quadrature with the closed form")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", type=_rational, required=True, help="decimal or p/q")
    p.add_argument("--tol", type=_positive_float, default=1e-8)
    add_format(p)
    return parser


def _emit_results(results: list[report.CheckResult], fmt: str) -> int:
    out = report.to_json(results) + "\n" if fmt == "json" else report.to_tsv(results)
    sys.stdout.write(out)
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(f"FAIL {r.check}: {r.witness}", file=sys.stderr)
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed", file=sys.stderr)
        return EXIT_FAIL
    print(f"all {len(results)} checks passed", file=sys.stderr)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    many = len(args.m) > 1
    for m in args.m:
        table = core.big_d(m) if args.kind == "D" else core.d_coeffs(m)
        if args.format == "json":
            sys.stdout.write(table.to_json() + "\n")
        else:
            if many:
                sys.stdout.write(f"# m={m}\n")
            sys.stdout.write(table.to_tsv())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    return _emit_results(sweep(args.m, args.checks), args.format)


def cmd_oracle(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    bound = oracle.enumeration_bound()
    if args.m.start < 1 or args.m.stop - 1 > bound:
        parser.error(
            f"oracle supports 1 <= m <= {bound}; set {oracle.MAX_M_ENV} to raise the bound"
        )
    results: list[report.CheckResult] = []
    for m in args.m:
        results.extend(oracle.verify_model(m))
    return _emit_results(results, args.format)


def _fmt12(x: float) -> str:
    return f"{x:.12g}"


def cmd_integral(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.a <= -1:
        parser.error(f"--a must be > -1, got {args.a}")
    if not 0 <= args.m <= quadrature.MAX_M:
        parser.error(f"--m must be in 0..{quadrature.MAX_M}")
    try:
        res = quadrature.integral_check(args.m, args.a, args.tol)
    except quadrature.QuadratureError as exc:
        print(f"quadrature failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    row = {
        "m": res.m,
        "a": str(args.a),
        "numeric": _fmt12(res.numeric),
        "closed_form": _fmt12(res.closed_form),
        "abs_err": _fmt12(res.abs_err),
        "tol": _fmt12(res.tol),
        "pass": res.passed,
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(row, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write("\t".join(row) + "\n")
        sys.stdout.write(
            "\t".join(str(v).lower() if isinstance(v, bool) else str(v) for v in row.values())
            + "\n"
        )
    if not res.passed:
        print(f"abs_err {res.abs_err:.3g} exceeds tol {res.tol:.3g}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        return cmd_table(args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "oracle":
        return cmd_oracle(args, parser)
    return cmd_integral(args, parser)


if __name__ == "__main__":
    sys.exit(main())
