"""Command-line front end: exact lcm queries, sweeps, and bound suites.

Exit codes: 0 when every check passes (or the computation simply
succeeds), 1 when a mathematical discrepancy is found (a bound or the
expected exception set is violated, which should never happen), 2 on
usage errors. Big integers are always printed in full as decimal
strings; JSON output is canonical (sorted keys) and round-trips.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import verifier
from .lcm_engine import RangeLcmRequest, chebyshev_psi, lcm_range
from .polynomial import Poly, identity_lhs_value, verify_identity
from .verifier import (
    DEFAULT_SUITE_LIMITS,
    FamilyFilter,
    SweepConfig,
    campaign_to_csv,
    campaign_to_json,
    canonical_json,
    run_campaign,
    run_suite,
    suite_result_to_dict,
)

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2

# Suites exposed on the command line (the identity suite has its own
# subcommand with an (m, n) grid instead of a single limit).
REPORT_SUITES = ("lemma22", "lemma-key", "key1", "key2", "nair", "hanson", "half-range-ln")


def _parse_poly(parser: argparse.ArgumentParser, text: str) -> Poly:
    """Comma-separated coefficients, constant term first."""
    coeffs = []
    for token in text.split(","):
        token = token.strip()
        try:
            coeffs.append(int(token))
        except ValueError:
            parser.error(f"--poly: invalid coefficient {token!r}")
    return Poly(coeffs)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _workers(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int | None:
    value = getattr(args, "parallelism", None)
    if value is None:
        env = os.environ.get("LCMLAB_THREADS", "").strip()
        if env:
            try:
                value = int(env)
            except ValueError:
                parser.error(f"LCMLAB_THREADS: invalid value {env!r}")
    if value is not None and value < 1:
        parser.error(f"parallelism must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcmlab",
        description="Exact lcm computations over integer polynomial sequences, "
        "with bound reports and exhaustive exception sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lcm_cmd = sub.add_parser(
        "lcm",
        help="exact lcm of f(m), ..., f(n)",
        description="Print the exact lcm of |f(i)| for i in [m, n] as a decimal string.",
    )
    lcm_cmd.add_argument(
        "--poly",
        required=True,
        help="comma-separated integer coefficients, constant term first (e.g. '0,1' is x)",
    )
    lcm_cmd.add_argument("--m", type=int, required=True, help="range start, >= 1")
    lcm_cmd.add_argument("--n", type=int, required=True, help="range end, >= m")
    lcm_cmd.add_argument("--format", choices=("plain", "json"), default="plain")
    lcm_cmd.add_argument("--output", help="write to this file instead of stdout")

    vt = sub.add_parser(
        "verify-theorem",
        help="sweep a polynomial family against the 2^n bound",
        description="Check every polynomial with degree <= D and coefficients in [0, C] "
        "(leading >= 1) for n <= N, and compare the failures against the expected "
        "exception set. Exit 0 on an exact match, 1 otherwise.",
    )
    vt.add_argument("--max-degree", type=int, required=True, metavar="D")
    vt.add_argument("--coeff-max", type=int, required=True, metavar="C")
    vt.add_argument("--n-max", type=int, required=True, metavar="N")
    vt.add_argument(
        "--full-range",
        action="store_true",
        help="check lcm over [1, n] instead of the default [ceil(n/2), n]",
    )
    vt.add_argument(
        "--filter",
        choices=tuple(f.value for f in FamilyFilter),
        default=FamilyFilter.ALL.value,
        help="restrict the family (default: all)",
    )
    vt.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    vt.add_argument("--output", help="write the report to this file instead of stdout")
    vt.add_argument("--parallelism", type=int, help="worker threads (or env LCMLAB_THREADS)")

    vi = sub.add_parser(
        "verify-identity",
        help="symbolically verify the alternating-sum collapse on an (m, n) grid",
        description="Expand the alternating binomial-weighted sum of skip-one linear "
        "products for every 1 <= m <= n in the grid and check it equals (n-m)!, "
        "with a pointwise evaluation cross-check.",
    )
    vi.add_argument("--m-max", type=int, required=True)
    vi.add_argument("--n-max", type=int, required=True)
    vi.add_argument("--format", choices=("plain", "json"), default="plain")

    psi_cmd = sub.add_parser(
        "psi",
        help="Chebyshev psi: exact lcm(1..n) with log and bit length",
        description="Compute lcm(1..n) exactly; the printed psi value (its natural log) "
        "is display-only.",
    )
    psi_cmd.add_argument("--n", type=int, required=True)
    psi_cmd.add_argument("--table", action="store_true", help="print one row per k <= n")
    psi_cmd.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    psi_cmd.add_argument("--output", help="write to this file instead of stdout")

    br = sub.add_parser(
        "bounds-report",
        help="run one bound suite and summarize",
        description="Run a named bound suite up to a limit and print a pass/fail "
        "summary. Exit 0 iff every check passes.",
    )
    br.add_argument("--suite", required=True, choices=REPORT_SUITES)
    br.add_argument(
        "--limit",
        type=int,
        help="suite size: max n for lemma22/nair/hanson/half-range-ln, max m for key1, "
        "max a and b for key2, number of random cases for lemma-key "
        "(defaults per suite)",
    )
    br.add_argument("--format", choices=("plain", "json"), default="plain")

    return parser


def _cmd_lcm(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    f = _parse_poly(parser, args.poly)
    if not 1 <= args.m <= args.n:
        parser.error(f"need 1 <= m <= n, got m={args.m}, n={args.n}")
    value = lcm_range(RangeLcmRequest(f, args.m, args.n))
    if args.format == "json":
        payload = {"poly": list(f.coeffs), "m": args.m, "n": args.n, "lcm": str(value)}
        _emit(canonical_json(payload), args.output)
    else:
        _emit(str(value), args.output)
    return EXIT_OK


def _campaign_plain(report: verifier.CampaignReport) -> str:
    cfg = report.config
    mode = "full-range [1, n]" if report.full_range else "half-range [ceil(n/2), n]"
    lines = [
        f"swept degree <= {cfg.max_degree}, coefficients in [0, {cfg.coeff_max}], "
        f"n <= {cfg.n_max}, filter {cfg.family_filter.value}, {mode}",
        f"checked {report.checked_count} (f, n) pairs in {report.duration_s:.2f}s",
        f"exceptions ({len(report.exceptions)}):",
    ]
    for rec in report.exceptions:
        lines.append(f"  f = {rec.f}, n = {rec.n}: lcm = {rec.lcm_value} < {rec.threshold}")
    for note in report.notes:
        lines.append(f"note: {note}")
    verdict = "yes" if report.matches_expected() else "NO"
    lines.append(f"expected exception set reproduced: {verdict}")
    return "\n".join(lines) + "\n"


def _cmd_verify_theorem(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.max_degree < 1 or args.coeff_max < 1 or args.n_max < 1:
        parser.error("--max-degree, --coeff-max and --n-max must all be >= 1")
    cfg = SweepConfig(
        max_degree=args.max_degree,
        coeff_max=args.coeff_max,
        n_max=args.n_max,
        family_filter=FamilyFilter(args.filter),
    )
    report = run_campaign(cfg, full_range=args.full_range, workers=_workers(parser, args))
    if args.format == "json":
        _emit(campaign_to_json(report), args.output)
    elif args.format == "csv":
        _emit(campaign_to_csv(report), args.output)
    else:
        _emit(_campaign_plain(report), args.output)
    return EXIT_OK if report.matches_expected() else EXIT_DISCREPANCY


def _cmd_verify_identity(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.m_max < 1 or args.n_max < 1:
        parser.error("--m-max and --n-max must be >= 1")
    checked = failures = 0
    first = None
    for n in range(1, args.n_max + 1):
        for m in range(1, min(n, args.m_max) + 1):
            rep = verify_identity(m, n)
            ok = rep.holds
            if ok:
                deg = n - m
                ok = all(
                    identity_lhs_value(m, n, x) == rep.expected
                    for x in range(n + 1, n + deg + 3)
                )
            checked += 1
            if not ok:
                failures += 1
                if first is None:
                    first = f"(m={m}, n={n})"
    if args.format == "json":
        payload = {
            "m_max": args.m_max,
            "n_max": args.n_max,
            "checked": checked,
            "failures": failures,
            "first_counterexample": first,
        }
        print(canonical_json(payload), end="")
    else:
        print(f"{checked} identities verified, {failures} failures")
        if first is not None:
            print(f"first counterexample: {first}")
    return EXIT_OK if failures == 0 else EXIT_DISCREPANCY


def _psi_rows(n: int, table: bool):
    return [chebyshev_psi(k) for k in range(1, n + 1)] if table else [chebyshev_psi(n)]


def _cmd_psi(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.n < 1:
        parser.error(f"--n must be >= 1, got {args.n}")
    rows = _psi_rows(args.n, args.table)
    if args.format == "json":
        payload = [
            {"n": r.n, "lcm": str(r.lcm_value), "psi": r.log_value, "bits": r.bit_length}
            for r in rows
        ]
        _emit(canonical_json(payload if args.table else payload[0]), args.output)
    elif args.format == "csv":
        lines = ["n,lcm,psi,bits"]
        lines += [f"{r.n},{r.lcm_value},{r.log_value:.6f},{r.bit_length}" for r in rows]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        text = "\n".join(
            (f"n={r.n} " if args.table else "")
            + f"lcm={r.lcm_value} psi={r.log_value:.6f} bits={r.bit_length}"
            for r in rows
        )
        _emit(text + "\n", args.output)
    return EXIT_OK


def _cmd_bounds_report(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.limit is not None and args.limit < 1:
        parser.error(f"--limit must be >= 1, got {args.limit}")
    result = run_suite(args.suite, args.limit)
    if args.format == "json":
        print(canonical_json(suite_result_to_dict(result)), end="")
    else:
        limit = args.limit if args.limit is not None else DEFAULT_SUITE_LIMITS[args.suite]
        status = "PASS" if result.passed else "FAIL"
        print(
            f"suite {result.name} (limit {limit}): {result.checked} checks, "
            f"{result.failures} failures in {result.duration_s:.2f}s: {status}"
        )
        if result.first_counterexample is not None:
            print(f"first counterexample: {result.first_counterexample}")
    return EXIT_OK if result.passed else EXIT_DISCREPANCY


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "lcm": _cmd_lcm,
        "verify-theorem": _cmd_verify_theorem,
        "verify-identity": _cmd_verify_identity,
        "psi": _cmd_psi,
        "bounds-report": _cmd_bounds_report,
    }
    return handlers[args.command](parser, args)


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
