"""Command-line interface: coefficient queries, series expansion, numerical
verification, table inspection and the scaling benchmark.

Exit codes: 0 success, 1 usage error, 2 computation error.  Machine formats
(json/csv) go to stdout untouched; diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .coeff import coefficient_block, coefficient_naive
from .errors import ComputationError, UsageError
from .mateval import verify_convergence
from .series import expand, serialize
from .tables import precompute_tables
from .words import enumerate_words, parse_word

NAIVE_BENCH_CAP = 16
NAIVE_WARN_ORDER = 20


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; remap to 1 per the CLI contract."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> _Parser:
    parser = _Parser(prog="bchcalc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"bchcalc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("coeff", help="coefficient of one commutator monomial")
    p.add_argument("--word", required=True, help="monomial as a string over X/Y")
    p.add_argument("--naive", action="store_true", help="use the brute-force oracle")

    p = sub.add_parser("expand", help="full truncated series up to an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--prune-zero-coeff", action="store_true")
    p.add_argument("--prune-zero-monomial", action="store_true")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p = sub.add_parser("verify", help="numerical residual against log(exp X exp Y)")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("tables", help="precompute coefficient tables")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--dump", action="store_true", help="print f' rows, tab-separated")

    p = sub.add_parser("bench", help="time full-series expansion per order")
    p.add_argument("--min-order", type=int, required=True)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--mode", choices=["block", "naive"], default="block")
    return parser


def _cmd_coeff(args) -> None:
    w = parse_word(args.word)
    if args.naive:
        if len(w) > NAIVE_WARN_ORDER:
            print(
                f"warning: naive coefficient for order {len(w)} is exponential-time",
                file=sys.stderr,
            )
        c = coefficient_naive(w)
    else:
        c = coefficient_block(w, precompute_tables(len(w)))
    print(f"{c.numerator}/{c.denominator}")


def _cmd_expand(args) -> None:
    if args.order < 1:
        raise UsageError(f"--order must be >= 1, got {args.order}")
    t = precompute_tables(args.order)
    s = expand(
        args.order,
        args.prune_zero_coeff,
        args.prune_zero_monomial,
        t,
        threads=args.threads,
    )
    rendered = serialize(s, args.format)
    if args.format == "json":
        rendered += "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)


def _cmd_verify(args) -> None:
    try:
        report = verify_convergence(
            args.order, args.dim, args.epsilon, args.samples, args.seed,
            precompute_tables(args.order),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        print(json.dumps(report.to_dict(), separators=(",", ":")))
    else:
        d = report.to_dict()
        for key in ("order", "dim", "epsilon", "samples", "seed", "generator"):
            print(f"{key}: {d[key]}")
        for i, r in enumerate(report.residuals):
            print(f"residual[{i}]: {r:.6e}")
        print(f"max_residual: {report.max_residual:.6e}")


def _cmd_tables(args) -> None:
    if args.max_order < 1:
        raise UsageError(f"--max-order must be >= 1, got {args.max_order}")
    t = precompute_tables(args.max_order)
    if args.dump:
        for u in range(1, t.max_order + 1):
            print("\t".join(str(t.f_prime(u, n)) for n in range(1, u + 1)))
    else:
        print(f"precomputed tables up to order {t.max_order}", file=sys.stderr)


def _cmd_bench(args) -> None:
    lo, hi = args.min_order, args.max_order
    if not 1 <= lo <= hi:
        raise UsageError(f"need 1 <= min-order <= max-order, got {lo}..{hi}")
    if args.mode == "naive" and hi > NAIVE_BENCH_CAP:
        raise UsageError(
            f"naive mode is capped at order {NAIVE_BENCH_CAP}, got {hi}"
        )
    print("order,mode,word_count,wall_time_seconds")
    for order in range(lo, hi + 1):
        word_count = 2 ** (order + 1) - 2
        if args.mode == "block":
            t = precompute_tables(order)
            start = time.perf_counter()
            expand(order, False, False, t)
            elapsed = time.perf_counter() - start
        else:
            start = time.perf_counter()
            for n in range(1, order + 1):
                for w in enumerate_words(n):
                    coefficient_naive(w)
            elapsed = time.perf_counter() - start
        print(f"{order},{args.mode},{word_count},{elapsed:.6f}")


_HANDLERS = {
    "coeff": _cmd_coeff,
    "expand": _cmd_expand,
    "verify": _cmd_verify,
    "tables": _cmd_tables,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"bchcalc {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except ComputationError as exc:
        print(f"bchcalc {args.command}: error: {exc}", file=sys.stderr)
        return 2
    return 0


def entry() -> None:
    sys.exit(main())
