"""
Command-line entry point.

    verify run [--suite S] [--case ID]... [--format text|json] [--jobs N]
               [--cache-dir P] [--max-order M] [--max-monomials K] [--output PATH]
    verify list [--format text|json]
    verify table NAME
    verify molien NAME REP DMAX

Exit codes: 0 all checks pass (skips allowed), 1 some check failed,
2 configuration or data error.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from audits import load_manifest
from characters import TableCache, character_table, molien_series, render_table
from config import CACHE_DIR, TOOL_VERSION
from errors import ConfigError, VerifyError
from models import CheckStatus, OutputFormat, RunReport, StepKind, Suite, SuiteConfig
from orchestrator import all_checks, run_workflow
from utils import truncate_string

logger = logging.getLogger(__name__)

STATUS_MARK = {CheckStatus.PASS: "PASS", CheckStatus.FAIL: "FAIL", CheckStatus.SKIP: "SKIP"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="verify", description="Exact verification of finite-group case analyses on Fano 3-folds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
    parser.add_argument("-q", "--quiet", action="store_true", help="Only log warnings and errors")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="Run check suites and case audits")
    run.add_argument("--suite", default=Suite.ALL.value, choices=[s.value for s in Suite], help="Suite to run")
    run.add_argument("--case", dest="case_ids", action="append", default=[], metavar="ID", help="Restrict to a check or audit id (repeatable)")
    run.add_argument("--format", dest="output_format", default=OutputFormat.TEXT.value, choices=[f.value for f in OutputFormat])
    run.add_argument("--jobs", type=int, default=None, help="Worker threads per suite")
    run.add_argument("--cache-dir", default=None, help="Character table cache directory ('' disables it)")
    run.add_argument("--max-order", type=int, default=None, help="Largest group order to materialize")
    run.add_argument("--max-monomials", type=int, default=None, help="Largest monomial basis")
    run.add_argument("--output", dest="output_path", default=None, help="Also write the JSON report here")

    lst = sub.add_parser("list", help="List checks and registered audits")
    lst.add_argument("--format", dest="output_format", default=OutputFormat.TEXT.value, choices=[f.value for f in OutputFormat])

    table = sub.add_parser("table", help="Print the character table of a catalogue group")
    table.add_argument("name")

    molien = sub.add_parser("molien", help="Invariant dimensions of Sym^d of an irreducible, d = 0..DMAX")
    molien.add_argument("name")
    molien.add_argument("rep", type=int, help="Row of the irreducible in the character table")
    molien.add_argument("dmax", type=int)
    return parser


def config_from_args(args: argparse.Namespace) -> SuiteConfig:
    """
    SuiteConfig from parsed arguments; unset options keep their defaults.

    Raises:
        ConfigError: the options do not validate
    """
    fields = {
        "suite": args.suite,
        "case_ids": args.case_ids,
        "output_format": args.output_format,
        "output_path": args.output_path,
    }
    for key in ("jobs", "max_order", "max_monomials"):
        if getattr(args, key) is not None:
            fields[key] = getattr(args, key)
    if args.cache_dir is not None:
        fields["cache_dir"] = args.cache_dir or None
    try:
        return SuiteConfig(**fields)
    except ValidationError as e:
        raise ConfigError(f"invalid options: {e.errors()[0]['msg']}", detail=e.errors()) from e


def render_text(report: RunReport) -> str:
    lines = []
    for rec in report.records:
        line = f"{STATUS_MARK[rec.status]}  {rec.id:<34} {rec.ms:>7} ms"
        if rec.detail:
            line += f"  {truncate_string(rec.detail, 80)}"
        lines.append(line)
        assertions = [s.description for s in rec.steps if s.kind == StepKind.DATA_ASSERTION]
        for text in assertions:
            lines.append(f"      data assertion: {truncate_string(text, 90)}")
    s = report.summary
    lines.append(
        f"{s.total} checks: {s.passed} pass, {s.failed} fail, {s.skipped} skip, "
        f"{s.data_assertions} data assertions"
    )
    for err in report.errors:
        lines.append(f"error: {err}")
    return "\n".join(lines)


def cmd_run(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    report = run_workflow(config)
    if config.output_format == OutputFormat.JSON:
        print(report.model_dump_json(indent=2))
    else:
        print(render_text(report))
    return report.exit_code


def cmd_list(args: argparse.Namespace) -> int:
    manifest = load_manifest()
    rows = []
    for check in all_checks():
        row = {"id": check.id, "suite": check.suite.value, "anchor": check.anchor}
        if check.id in manifest:
            row["quote"] = manifest[check.id].quote
            row["expected_hash"] = manifest[check.id].expected_hash
        rows.append(row)
    if args.output_format == OutputFormat.JSON.value:
        print(json.dumps(rows, indent=2, ensure_ascii=False))
    else:
        for row in rows:
            print(f"{row['id']:<34} {row['suite']:<11} {row['anchor']}")
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    T = character_table(args.name, cache=TableCache(CACHE_DIR))
    print(render_table(T))
    return 0


def cmd_molien(args: argparse.Namespace) -> int:
    T = character_table(args.name, cache=TableCache(CACHE_DIR))
    if not 0 <= args.rep < T.class_count:
        raise ConfigError(f"{args.name} has irreducibles 0..{T.class_count - 1}, got {args.rep}")
    if args.dmax < 0:
        raise ConfigError("DMAX must be nonnegative")
    series = molien_series(T.character(args.rep), args.dmax)
    print(" ".join(map(str, series)))
    return 0


COMMANDS = {"run": cmd_run, "list": cmd_list, "table": cmd_table, "molien": cmd_molien}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.quiet:
        logging.getLogger().setLevel(logging.WARNING)
    try:
        return COMMANDS[args.command](args)
    except VerifyError as e:
        logger.error(f"❌ {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
