"""Command-line surface: zeta2k {coeff,eval,verify,table,bernoulli,fourier,bench}.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Flags are
validated before any computation starts; output goes to stdout unless
--output PATH is given, in which case the file is written atomically
(temp file in the target directory, then rename).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from fractions import Fraction
from math import prod

from mpmath import mp

from .bench import DEFAULT_SWEEP, BackendMismatchError, bench_compare
from .bernoulli import BernoulliTable, zeta_coeff_via_bernoulli
from .exact import format_rational
from .fourier import (
    b_factor,
    b_product_closed,
    cosine_coeff_closed,
    cosine_coeff_quadrature,
    cosine_coeff_recursive,
)
from .precision import PrecisionConfig, format_real, zeta_eval
from .recursive import ZetaCoeffTable, consistency_residual

__all__ = ["main", "entrypoint", "build_parser"]


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _k_list(text: str) -> tuple[int, ...]:
    items = [piece for piece in text.split(",") if piece.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of k values")
    return tuple(_positive_int(piece.strip()) for piece in items)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeta2k",
        description="Exact rational coefficients c_k with zeta(2k) = c_k*pi^(2k), "
        "their verification suites, decimal evaluation, and backend benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument(
            "--output",
            metavar="PATH",
            help="write the result to PATH atomically instead of stdout",
        )
        return p

    p = with_output(sub.add_parser("coeff", help="print the exact coefficient c_k"))
    p.add_argument("-k", type=_positive_int, required=True, metavar="K")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=_cmd_coeff)

    p = with_output(sub.add_parser("eval", help="print zeta(2k) to D digits"))
    p.add_argument("-k", type=_positive_int, required=True, metavar="K")
    p.add_argument("-d", "--digits", type=_positive_int, required=True, metavar="D")
    p.set_defaults(func=_cmd_eval)

    p = with_output(
        sub.add_parser("verify", help="run the exact cross-backend and cosine-series suites")
    )
    p.add_argument("--max-k", type=_positive_int, default=50, metavar="K")
    p.set_defaults(func=_cmd_verify)

    p = with_output(sub.add_parser("table", help="export c_1..c_K"))
    p.add_argument("--max-k", type=_positive_int, required=True, metavar="K")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_table)

    p = with_output(sub.add_parser("bernoulli", help="export B_0..B_M"))
    p.add_argument("--max-index", type=_nonnegative_int, required=True, metavar="M")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_bernoulli)

    p = with_output(
        sub.add_parser(
            "fourier",
            help="compare closed/recursive/quadrature cosine coefficients as CSV",
        )
    )
    p.add_argument("-k", type=_positive_int, required=True, metavar="K",
                   help="sweep 1 <= k <= K")
    p.add_argument("-n", type=_positive_int, required=True, metavar="N",
                   help="sweep 1 <= n <= N")
    p.set_defaults(func=_cmd_fourier)

    p = with_output(sub.add_parser("bench", help="time both backends"))
    p.add_argument(
        "--k-list",
        type=_k_list,
        default=DEFAULT_SWEEP,
        metavar="K1,K2,...",
        help=f"comma-separated k values (default {','.join(map(str, DEFAULT_SWEEP))})",
    )
    p.add_argument("--reps", type=_positive_int, default=3, metavar="R")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_bench)

    return parser


# ---------------------------------------------------------------------------
# subcommands: each returns (text, exit_code)


def _cmd_coeff(args) -> tuple[str, int]:
    c = ZetaCoeffTable(args.k).coeff(args.k)
    if args.format == "json":
        return (
            json.dumps({"k": args.k, "num": str(c.numerator), "den": str(c.denominator)}),
            0,
        )
    return format_rational(c), 0


def _cmd_eval(args) -> tuple[str, int]:
    cfg = PrecisionConfig(digits=args.digits)
    c = ZetaCoeffTable(args.k).coeff(args.k)
    return format_real(zeta_eval(args.k, cfg, c)), 0


def _first_verify_failure(max_k: int):
    """(k, message) for the first exact identity that fails, else None."""
    table = ZetaCoeffTable(max_k)
    bernoulli = BernoulliTable(2 * max_k)
    for k in range(1, max_k + 1):
        via_recursion = table.coeff(k)
        via_bernoulli = zeta_coeff_via_bernoulli(k, bernoulli)
        if via_recursion != via_bernoulli:
            return k, (
                f"backend mismatch: recursive={format_rational(via_recursion)} "
                f"bernoulli={format_rational(via_bernoulli)}"
            )
        if consistency_residual(table, k) != 0:
            return k, "consistency identity residual is nonzero"
    for k in range(1, min(max_k, 12) + 1):
        closed = cosine_coeff_closed(k)
        for n in range(1, 9):
            recursive_poly = {t.pi_power: t.coeff for t in cosine_coeff_recursive(k, n)}
            if closed.substitute(n) != recursive_poly:
                return k, f"cosine coefficient mismatch at n={n}"
        for n in (1, 2, 3):
            for j in range(k):
                direct = prod(
                    (b_factor(k - i, n) for i in range(j + 1)), start=Fraction(1)
                )
                if direct != b_product_closed(k, j, n):
                    return k, f"b-product mismatch at j={j}, n={n}"
    return None


def _cmd_verify(args) -> tuple[str, int]:
    failure = _first_verify_failure(args.max_k)
    if failure is None:
        return f"OK {args.max_k}/{args.max_k}", 0
    k, message = failure
    return f"FAIL k={k}: {message}", 1


def _cmd_table(args) -> tuple[str, int]:
    table = ZetaCoeffTable(args.max_k)
    return (table.to_csv() if args.format == "csv" else table.to_json()), 0


def _cmd_bernoulli(args) -> tuple[str, int]:
    table = BernoulliTable(args.max_index)
    return (table.to_csv() if args.format == "csv" else table.to_json()), 0


def _poly_value(poly: dict[int, Fraction]):
    return mp.fsum(
        mp.mpf(c.numerator) / c.denominator * mp.pi**power
        for power, c in sorted(poly.items())
    )


def _cmd_fourier(args) -> tuple[str, int]:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "n", "source", "value"])
    for k in range(1, args.k + 1):
        closed = cosine_coeff_closed(k)
        for n in range(1, args.n + 1):
            with mp.workdps(30 + 2 * k):
                closed_value = _poly_value(closed.substitute(n))
                recursive_value = _poly_value(
                    {t.pi_power: t.coeff for t in cosine_coeff_recursive(k, n)}
                )
            quadrature_value = cosine_coeff_quadrature(k, n, 1e-12).value
            for source, value in (
                ("closed", closed_value),
                ("recursive", recursive_value),
                ("quadrature", quadrature_value),
            ):
                writer.writerow([k, n, source, mp.nstr(value, 17, strip_zeros=False)])
    return buf.getvalue(), 0


def _cmd_bench(args) -> tuple[str, int]:
    report = bench_compare(args.k_list, args.reps)
    return (report.to_csv() if args.format == "csv" else report.to_json()), 0


# ---------------------------------------------------------------------------


def _write_atomic(path: str, text: str) -> None:
    target = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".zeta2k-")
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        text, code = args.func(args)
    except BackendMismatchError as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    if args.output:
        _write_atomic(args.output, text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")
    return code


def entrypoint() -> None:
    sys.exit(main())
