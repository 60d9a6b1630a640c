"""Command line: ``disaster-games solve|reproduce|validate``.

Exit codes: 0 success / feasible plan, 1 usage or validation error,
2 infeasible plan (backup shortfall), 3 reproduction mismatch.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import cases
from .allocation import FORMATS, report, solve
from .cost_model import AlphaWeights, CostModelError
from .scenario import ScenarioError, UnsupportedArityError, kerala, load

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_MISMATCH = 3

log = logging.getLogger("disaster_games")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class RunConfig:
    scenario_path: Optional[Path]
    alpha_override: Optional[AlphaWeights]
    output_format: str = "table"
    output_path: Optional[Path] = None
    verbosity: int = 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for solver detail")

    scen = _Parser(add_help=False)
    scen.add_argument("--scenario", type=Path,
                      help="scenario JSON file (default: bundled Kerala fixture)")

    out = _Parser(add_help=False)
    out.add_argument("--format", choices=FORMATS, default="table")
    out.add_argument("--out", type=Path, help="write the report here instead of stdout")

    parser = _Parser(prog="disaster-games", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common, scen, out], help="solve a scenario")
    p.add_argument("--alphas", help="override weights as T,C,L (time, fuel, penalty)")

    p = sub.add_parser("reproduce", parents=[common, out], help="rerun a published case")
    p.add_argument("case", type=int, choices=sorted(cases.CASES))

    sub.add_parser("validate", parents=[common, scen], help="check a scenario file")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(level)
    log.propagate = False


def _load(path: Optional[Path]):
    return kerala() if path is None else load(path)


def _emit(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)
        log.info("report written to %s", path)


def _solve(config: RunConfig) -> int:
    scenario = _load(config.scenario_path)
    if config.alpha_override is not None:
        scenario = scenario.with_alphas(config.alpha_override)
    plan = solve(scenario)
    _emit(report(plan, config.output_format), config.output_path)
    if not plan.feasible:
        print(f"infeasible: backup station short by {plan.backup_shortfall} units", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


def _reproduce(number: int, fmt: str, out: Optional[Path]) -> int:
    plan = cases.run_case(number)
    _emit(report(plan, fmt), out)
    diffs = cases.compare(number, plan)
    if diffs:
        print(f"case {number} does not match the published table:", file=sys.stderr)
        for d in diffs:
            print(f"  - {d}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"case {number}: matches published equilibria within {cases.COST_TOL:g}", file=sys.stderr)
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    _configure_logging(args.verbose)

    try:
        if args.command == "reproduce":
            return _reproduce(args.case, args.format, args.out)
        if args.command == "validate":
            scenario = _load(args.scenario)
            needs = ", ".join(f"{loc.id}={loc.need}" for loc in scenario.locations)
            print(f"ok: {len(scenario.locations)} locations, {len(scenario.stations)} stations; needs {needs}")
            return EXIT_OK
        config = RunConfig(
            scenario_path=args.scenario,
            alpha_override=AlphaWeights.parse(args.alphas) if args.alphas else None,
            output_format=args.format,
            output_path=args.out,
            verbosity=args.verbose,
        )
        return _solve(config)
    except ScenarioError as exc:
        print("invalid scenario:", file=sys.stderr)
        for path, message in exc.violations:
            print(f"  {path}: {message}" if path else f"  {message}", file=sys.stderr)
        return EXIT_USAGE
    except (CostModelError, UnsupportedArityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
