"""Command-line driver.

    verify run --suite <name> [--config <path>] [--format json|csv]
               [--jobs N] [--out <path>]
    verify conjecture [--config <path>] [--format json|csv] [--jobs N] [--out <path>]
    verify list-suites

Exit codes: 0 all selected checks pass, 1 at least one failure,
2 configuration or usage error.  TURANCHECK_CONFIG names a default
config file.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .report import SuiteReport, emit_report
from .runner import conjecture_scan, load_config, run_suite
from .suites import SUITES, ConfigError

ENV_CONFIG = "TURANCHECK_CONFIG"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Verify log-concavity and Turan-type inequalities for "
        "series in reciprocal gamma functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", default=None, help="TOML config file")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    run_p = sub.add_parser("run", help="run a named check suite")
    run_p.add_argument("--suite", required=True, help="suite name")
    add_common(run_p)

    conj_p = sub.add_parser("conjecture", help="counterexample scan for the open conjecture")
    add_common(conj_p)

    sub.add_parser("list-suites", help="list available suites")
    return parser


def _emit(report: SuiteReport, fmt: str, out: Optional[str]) -> None:
    data = emit_report(report, fmt)
    if out is None:
        sys.stdout.buffer.write(data)
    else:
        with open(out, "wb") as fh:
            fh.write(data)
    summary = report.summary
    print(
        f"[{report.suite}] pass={summary['pass']} fail={summary['fail']} "
        f"skipped={summary['skipped']} hypothesis_violation={summary['hypothesis_violation']}",
        file=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0

    if args.command == "list-suites":
        for name in sorted(SUITES):
            print(name)
        print("conjecture (via the `conjecture` subcommand)")
        return 0

    config_path = args.config or os.environ.get(ENV_CONFIG)
    try:
        config = load_config(config_path)
        if args.jobs < 1:
            raise ConfigError("--jobs must be >= 1")
        if args.command == "run":
            report = run_suite(args.suite, config, jobs=args.jobs)
        else:
            report = conjecture_scan(config, jobs=args.jobs)
        _emit(report, args.format, args.out)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 1 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())
