"""Command-line entry point: ``planar-count {count,verify,series}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget overflow.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from pathlib import Path
from typing import Sequence

from planar_count import oracle, series, tableaux, walks
from planar_count._json import canonical_json
from planar_count.budget import ENV_VAR, BudgetExceeded

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planar-count", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count r-regular multigraphs with small planar matchings")
    count.add_argument("--n", type=_nonneg, required=True)
    count.add_argument("--r", type=_nonneg, required=True)
    count.add_argument("--d", type=_nonneg, required=True)
    count.add_argument("--method", choices=["brute", "walks", "tableaux", "chamber"], default="walks")
    count.add_argument("--variant", choices=["matching", "subgraph"], default="matching")
    count.add_argument("--format", choices=["json", "csv", "text"], default="json")
    count.add_argument("--budget", type=_positive)

    verify = sub.add_parser("verify", help="run every cross-method check and report")
    verify.add_argument("--max-rn", type=_nonneg, default=6)
    verify.add_argument("--max-d", type=_nonneg, default=4)
    verify.add_argument("--xmax", type=_nonneg, default=8)
    verify.add_argument("--claims", nargs="+", choices=oracle.CLAIMS)
    verify.add_argument("--corrupt", choices=oracle.CLAIMS, help="perturb one value (harness self-test)")
    verify.add_argument("--format", choices=["json", "csv"], default="json")
    verify.add_argument("--out", type=Path)
    verify.add_argument("--budget", type=_positive)

    ser = sub.add_parser("series", help="expand a generating function exactly")
    ser.add_argument("kind", choices=["gessel", "gessel-alt", "theorem8"])
    ser.add_argument("--d", type=_positive, default=2)
    ser.add_argument("--xmax", type=_nonneg, required=True)
    ser.add_argument("--format", choices=["json", "csv", "text"], default="json")
    ser.add_argument("--budget", type=_positive)
    return parser


def _emit_record(record: dict, fmt: str) -> str:
    if fmt == "json":
        return canonical_json(record)
    if fmt == "text":
        return " ".join(f"{k}={v}" for k, v in record.items())
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(record), lineterminator="\n")
    writer.writeheader()
    writer.writerow(record)
    return buf.getvalue().rstrip("\n")


def cmd_count(args: argparse.Namespace) -> int:
    n, r, d = args.n, args.r, args.d
    subgraph = args.variant == "subgraph"
    if args.method == "brute":
        value = oracle.brute_g_hat(n, r, d) if subgraph else oracle.brute_g(n, r, d)
    elif args.method == "tableaux":
        value = tableaux.count_tableau_pairs(n, r, d, "T_hat" if subgraph else "T", budget=args.budget)
    elif args.method == "walks":
        if d == 0:
            # No Toeplitz points in dimension 0: only the empty graph qualifies.
            value = 1 if n * r == 0 else 0
        else:
            value = walks.signed_toeplitz_sum(d, n, r, "hat" if subgraph else "prime")
    else:
        if subgraph:
            raise _UsageError("the chamber method only counts planar matchings")
        value = 1 if d == 0 and n * r == 0 else (walks.count_chamber_walks(d, n, r) if d else 0)
    record = {"n": n, "r": r, "d": d, "method": args.method, "variant": args.variant, "count": str(value)}
    print(_emit_record(record, args.format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = oracle.verify_all(
        max_rn=args.max_rn,
        max_d=args.max_d,
        x_bound=args.xmax,
        claims=tuple(args.claims) if args.claims else None,
        corrupt=args.corrupt,
    )
    text = report.to_json() if args.format == "json" else report.to_csv()
    if args.out:
        args.out.write_text(text if text.endswith("\n") else text + "\n")
        summary = report.summary()
        print(canonical_json({"out": str(args.out), **summary}))
    else:
        print(text.rstrip("\n"))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_series(args: argparse.Namespace) -> int:
    if args.kind == "gessel":
        s = series.gessel_determinant(args.d, args.xmax)
    elif args.kind == "gessel-alt":
        s = series.gessel_determinant_alt(args.xmax)
    else:
        s = series.theorem8_generating_function(args.xmax)
    coeffs = [(e, c) for e, c in enumerate(s.coefficients()) if c]
    if args.format == "json":
        record = {
            "series": args.kind,
            "xmax": args.xmax,
            "coefficients": [
                {"power": e, "num": str(c.numerator), "den": str(c.denominator)} for e, c in coeffs
            ],
        }
        if args.kind == "gessel":
            record["d"] = args.d
        print(canonical_json(record))
    elif args.format == "text":
        for e, c in coeffs:
            print(f"x^{e}: {c}")
    else:
        print("power,num,den")
        for e, c in coeffs:
            print(f"{e},{c.numerator},{c.denominator}")
    return EXIT_OK


class _UsageError(Exception):
    pass


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    previous = os.environ.get(ENV_VAR)
    if args.budget is not None:
        os.environ[ENV_VAR] = str(args.budget)
    handlers = {"count": cmd_count, "verify": cmd_verify, "series": cmd_series}
    try:
        return handlers[args.command](args)
    except _UsageError as exc:
        parser.error(str(exc))
    except BudgetExceeded as exc:
        print(f"planar-count: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    finally:
        if previous is None:
            os.environ.pop(ENV_VAR, None)
        else:
            os.environ[ENV_VAR] = previous
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
