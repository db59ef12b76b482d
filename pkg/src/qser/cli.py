"""Command-line front end for expansions, identity checks, and sign scans.

    qser expand <name>   [--order N] [--format table|csv|json]
    qser verify <target> [--order N] [--format table|csv|json]
    qser scan <target>   [--n-max N] [--format table|csv|json]

Exit codes: 0 when the expectation was met, 1 when a mathematical mismatch
was found, 2 on usage errors. stdout carries data only and is byte-identical
across identical invocations; diagnostics go to stderr. JSON documents are
single compact lines with every coefficient value rendered as a decimal
string, so no consumer ever rounds a big integer.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog, checks

__all__ = ["main", "VERIFY_TARGETS", "SCAN_TARGETS", "FORMATS"]

VERIFY_TARGETS = (
    "B20",
    "R5",
    "A_full",
    "B_full",
    "D_full",
    "dissect-A0",
    "dissect-B0",
    "dissect-D1",
    "dissect-C0",
)

SCAN_TARGETS = (
    "richmond-c",
    "richmond-d",
    "thm2",
    "thm3",
    "thm4",
    "thm5",
    "conjecture13",
    "asymptotic-c",
)

FORMATS = ("table", "csv", "json")

_SIGN_SCANS = {
    "richmond-c": ("c", "RICHMOND_C"),
    "richmond-d": ("d", "RICHMOND_D"),
    "thm2": ("A", "THM2_A"),
    "thm3": ("B", "THM3_B"),
    "thm4": ("C", "THM4_C"),
    "thm5": ("D", "THM5_D"),
}


def _usage_error(message: str) -> int:
    print(f"qser: {message}", file=sys.stderr)
    return 2


def _print_json(doc) -> None:
    print(json.dumps(doc, separators=(",", ":")))


def _report_dict(report: checks.Report) -> dict:
    divergence = None
    if report.first_divergence is not None:
        divergence = {
            "index": report.first_divergence.index,
            "lhs": str(report.first_divergence.lhs),
            "rhs": str(report.first_divergence.rhs),
        }
    return {
        "subject": report.subject,
        "order_checked": report.order_checked,
        "status": report.status.value,
        "first_divergence": divergence,
        "violations": [
            {"index": v.index, "value": str(v.value), "expected": v.expected.value}
            for v in report.violations
        ],
    }


# -- expand -------------------------------------------------------------------


def cmd_expand(args) -> int:
    if args.name not in catalog.NAMES:
        return _usage_error(
            f"unknown series name {args.name!r} (valid: {', '.join(catalog.NAMES)})"
        )
    if args.order < 1:
        return _usage_error(f"--order must be >= 1, got {args.order}")
    series = catalog.build(args.name, args.order)
    if args.fmt == "json":
        _print_json({"name": args.name, "coeffs": [str(v) for v in series]})
    elif args.fmt == "csv":
        print("n,coefficient")
        for n, v in enumerate(series):
            print(f"{n},{v}")
    else:
        wn = max(len("n"), len(str(series.prec - 1)))
        wv = max(len("coefficient"), max(len(str(v)) for v in series))
        print(f"{'n':>{wn}}  {'coefficient':>{wv}}")
        for n, v in enumerate(series):
            print(f"{n:>{wn}}  {str(v):>{wv}}")
    return 0


# -- verify -------------------------------------------------------------------


def _run_verify(target: str, order: int) -> checks.Report:
    if target == "B20":
        return checks.verify_identity_B20(order)
    if target == "R5":
        return checks.verify_identity_R5(order)
    if target in ("A_full", "B_full", "D_full"):
        return checks.verify_genfun(target, order)
    return checks.verify_dissection(target.split("-", 1)[1], order)


def _verify_table_line(report: checks.Report) -> str:
    line = f"{report.subject:<12} {report.status.value:<9} order={report.order_checked}"
    if report.first_divergence is not None:
        d = report.first_divergence
        line += f"  first divergence at n={d.index}: lhs={d.lhs} rhs={d.rhs}"
    return line


def cmd_verify(args) -> int:
    if args.target != "all" and args.target not in VERIFY_TARGETS:
        return _usage_error(
            f"unknown verify target {args.target!r} (valid: {', '.join(VERIFY_TARGETS + ('all',))})"
        )
    if args.order < 1:
        return _usage_error(f"--order must be >= 1, got {args.order}")
    targets = VERIFY_TARGETS if args.target == "all" else (args.target,)
    reports = [_run_verify(t, args.order) for t in targets]
    if args.fmt == "json":
        docs = [_report_dict(r) for r in reports]
        _print_json(docs if args.target == "all" else docs[0])
    elif args.fmt == "csv":
        print("subject,order_checked,status,divergence_index,lhs,rhs")
        for r in reports:
            d = r.first_divergence
            tail = f"{d.index},{d.lhs},{d.rhs}" if d is not None else ",,"
            print(f"{r.subject},{r.order_checked},{r.status.value},{tail}")
    else:
        for r in reports:
            print(_verify_table_line(r))
    return 0 if all(r.ok() for r in reports) else 1


# -- scan ---------------------------------------------------------------------


def _scan_csv(reports) -> None:
    print("subject,order_checked,status,index,value,expected")
    for r in reports:
        head = f"{r.subject},{r.order_checked},{r.status.value}"
        if r.violations:
            for v in r.violations:
                print(f"{head},{v.index},{v.value},{v.expected.value}")
        else:
            print(f"{head},,,")


def _scan_table(reports, extras=()) -> None:
    for r in reports:
        line = f"{r.subject:<15} {r.status.value:<9} order={r.order_checked}"
        if r.falsified_at is not None:
            line += f"  falsified_at={list(r.falsified_at)}"
        print(line)
        for v in r.violations:
            print(f"    n={v.index} value={v.value} expected={v.expected.value}")
    for line in extras:
        print(line)


def cmd_scan(args) -> int:
    if args.target not in SCAN_TARGETS:
        return _usage_error(
            f"unknown scan target {args.target!r} (valid: {', '.join(SCAN_TARGETS)})"
        )
    if args.n_max < 0:
        return _usage_error(f"--n-max must be >= 0, got {args.n_max}")
    if args.target == "conjecture13":
        return _scan_conjecture13(args)
    if args.target == "asymptotic-c":
        return _scan_asymptotic(args)
    name, pattern_name = _SIGN_SCANS[args.target]
    report = checks.scan_signs(
        name, getattr(checks, pattern_name), args.n_max, subject=args.target
    )
    if args.fmt == "json":
        _print_json(_report_dict(report))
    elif args.fmt == "csv":
        _scan_csv([report])
    else:
        _scan_table([report])
    return 0 if report.ok() else 1


def _scan_conjecture13(args) -> int:
    result = checks.check_conjecture13(args.n_max)
    parts = (("A", result.a), ("B", result.b), ("D", result.d))
    falsified = result.falsified_at
    if args.fmt == "json":
        any_falsified = any(r.status is checks.Status.FALSIFIED for _, r in parts)
        violations = []
        for label, r in parts:
            for v in r.violations:
                violations.append(
                    {
                        "index": v.index,
                        "value": str(v.value),
                        "expected": v.expected.value,
                        "series": label,
                    }
                )
        _print_json(
            {
                "subject": "conjecture13",
                "order_checked": args.n_max,
                "status": "falsified" if any_falsified else "verified",
                "first_divergence": None,
                "violations": violations,
                "falsified_at": falsified,
            }
        )
    elif args.fmt == "csv":
        _scan_csv([r for _, r in parts])
    else:
        summary = "expectation met" if result.matches_expected() else "UNEXPECTED OUTCOME"
        _scan_table(
            [r for _, r in parts],
            extras=[
                f"conjecture13    {summary}: "
                f"A={falsified['A']} B={falsified['B']} D={falsified['D']}"
            ],
        )
    return 0 if result.matches_expected() else 1


def _scan_asymptotic(args) -> int:
    scan = checks.scan_asymptotic(args.n_max)
    print(
        f"qser: asymptotic-c checked {scan.checked} indices, "
        f"{scan.agreements} sign agreements",
        file=sys.stderr,
    )
    if args.fmt == "json":
        doc = _report_dict(scan.report)
        doc["checked"] = scan.checked
        doc["agreements"] = scan.agreements
        _print_json(doc)
    elif args.fmt == "csv":
        _scan_csv([scan.report])
    else:
        _scan_table(
            [scan.report],
            extras=[
                f"asymptotic-c    checked={scan.checked} agreements={scan.agreements}"
            ],
        )
    return 0 if scan.report.ok() else 1


# -- entry point ----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qser",
        description="Exact integer q-series expansions, identity checks, and sign scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print coefficients of a named series")
    p.add_argument("name", help=f"series name, one of: {', '.join(catalog.NAMES)}")
    p.add_argument("--order", type=int, default=10, help="number of coefficients (default 10)")
    p.add_argument("--format", dest="fmt", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="check an identity coefficient-by-coefficient")
    p.add_argument("target", help=f"one of: {', '.join(VERIFY_TARGETS + ('all',))}")
    p.add_argument("--order", type=int, default=200, help="comparison order (default 200)")
    p.add_argument("--format", dest="fmt", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="scan coefficient signs against a pattern")
    p.add_argument("target", help=f"one of: {', '.join(SCAN_TARGETS)}")
    p.add_argument("--n-max", dest="n_max", type=int, default=500, help="largest index (default 500)")
    p.add_argument("--format", dest="fmt", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        code = args.func(args)
        sys.stdout.flush()
    except BrokenPipeError:
        # Reader hung up early (e.g. piped into head). Point stdout at
        # devnull so the interpreter's exit flush cannot raise again, and
        # die quietly instead of spraying a traceback.
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
