"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 singular parameters, 3 failed check.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .errors import ParameterSingular
from .exact_arith import as_rational
from .moments import MomentRequest, moment_polynomial
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_SINGULAR, EXIT_FAILED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _int_list(text: str) -> list:
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from exc
    if not out or any(v < 1 for v in out):
        raise argparse.ArgumentTypeError("n values must be positive")
    return out


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def output_record(result) -> dict:
    req = result.request
    return {
        "n": req.n,
        "mu": req.mu,
        "tau": fraction_str(req.tau),
        "a": fraction_str(req.a),
        "b": fraction_str(req.b),
        "coeffs": [
            {"num": str(c.numerator), "den": str(c.denominator)}
            for c in result.poly.coeffs
        ],
        "checks": {k: "pass" if v else "fail" for k, v in result.checks.items()},
    }


def dumps_record(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"), ensure_ascii=False)


def cmd_compute(args) -> int:
    try:
        req = MomentRequest(args.n, args.tau, args.alpha, args.beta, args.mu)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = moment_polynomial(req)
    except ParameterSingular as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    record = output_record(result)
    if args.format == "json":
        print(dumps_record(record))
    else:
        for k, c in enumerate(record["coeffs"]):
            print(f"{k} {c['num']}/{c['den']}")
    return EXIT_OK if all(result.checks.values()) else EXIT_FAILED


def cmd_verify(args) -> int:
    passed = 0
    for check, ok in run_suite(args.suite, max_n=args.max_n, seed=args.seed):
        if not ok:
            print(f"FAIL [{check.suite}] {check.label}")
            print(f"reproduce: {check.reproducer}")
            return EXIT_FAILED
        passed += 1
        if not args.quiet:
            print(f"pass [{check.suite}] {check.label}")
    print(f"{args.suite}: {passed} checks passed")
    return EXIT_OK


def bench_rows(n_list, mu, tau, a, b, repeat):
    """Mean wall time of the moment computation for each ``n``."""
    rows = []
    prev = None
    for n in n_list:
        req = MomentRequest(n, tau, a, b, mu)
        total = 0.0
        for _ in range(repeat):
            t0 = time.perf_counter()
            moment_polynomial(req)
            total += time.perf_counter() - t0
        mean = total / repeat
        rows.append((n, mean, None if prev is None else mean / prev))
        prev = mean
    return rows


def cmd_bench(args) -> int:
    try:
        rows = bench_rows(args.n_list, args.mu, args.tau, args.alpha, args.beta, args.repeat)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParameterSingular as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    print(f"{'n':>4}  {'wall-seconds':>12}  {'ratio':>7}")
    for n, secs, ratio in rows:
        r = "-" if ratio is None else f"{ratio:.2f}"
        print(f"{n:>4}  {secs:>12.4f}  {r:>7}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="selberg-moments",
        description="Exact characteristic-polynomial moments of the Jacobi beta-ensemble.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="compute <prod (x - z_j)^mu> exactly")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--tau", type=_rational, required=True)
    c.add_argument("--alpha", type=_rational, required=True, help="exponent a of z^(a-1)")
    c.add_argument("--beta", type=_rational, required=True, help="exponent b of (1-z)^(b-1)")
    c.add_argument("--mu", type=int, required=True)
    c.add_argument("--format", choices=("json", "plain"), default="json")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run exact identity suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--max-n", type=int, default=8)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("-q", "--quiet", action="store_true", help="only print failures and the summary")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time the matrix chain for several n")
    b.add_argument("--n-list", type=_int_list, default=[5, 10, 20])
    b.add_argument("--mu", type=int, default=2)
    b.add_argument("--tau", type=_rational, default=Fraction(1))
    b.add_argument("--alpha", type=_rational, default=Fraction(2))
    b.add_argument("--beta", type=_rational, default=Fraction(2))
    b.add_argument("--repeat", type=int, default=1)
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "repeat", 1) < 1:
        print("error: --repeat must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
