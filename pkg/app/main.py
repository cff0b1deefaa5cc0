"""Command-line entry point: `bvext <command> FILE... [options]`.

Each (input, suite group) pair is an independent task. Tasks run in a
process pool when --jobs > 1; results are assembled in submission order,
so the report does not depend on scheduling.
"""

import argparse
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from bvext.constants import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, OUTPUT_FORMATS
from bvext.errors import BudgetExceeded, BvextError
from bvext.events.registry import EventRegistry, EventType, publish
from bvext.results import SuiteReport

from .config import COMMANDS, AppConfig, RunConfig
from .corpus import load_instance
from .report import RunReport, render_json, render_table
from .suites import groups_for, run_group

logger = logging.getLogger("bvext")

COMMAND_HELP = {
    "validate": "algebra or Hopf axioms, Frobenius data and contraactions",
    "cohomology": "dimension table of HH(A, A) or Ext_H(k, k)",
    "operad": "operad axioms on basis cochains",
    "cyclic": "cyclic operator suites and stability",
    "bv": "Gerstenhaber and BV identities on cohomology classes",
    "nakayama": "weight splitting under the Nakayama automorphism",
    "dual": "dual right bialgebroid and translation map identities",
    "all": "every suite above",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("inputs", nargs="+", help="presentation JSON file(s)")
    common.add_argument("--max-degree", type=int, default=None, help="cohomological degree bound")
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="output format")
    common.add_argument("--jobs", type=int, default=None, help="worker processes")
    common.add_argument("--field", type=str, default=None, help="override the field: Q or GFp")
    common.add_argument("--progress", action="store_true", help="print suite progress to stderr")

    parser = argparse.ArgumentParser(
        prog="bvext",
        description="Exact cyclic-operad and BV checks on Hochschild cochains",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        sub.add_parser(command, parents=[common], help=COMMAND_HELP[command])
    return parser


# =============================================================================
# Tasks
# =============================================================================

def _error_dict(e: BvextError, group: str) -> Dict[str, Any]:
    return {**e.to_dict(), "exit_code": e.exit_code, "group": group}


def execute_task(path: str, group: str, run_settings: Dict[str, Any],
                 app_settings: Dict[str, Any]) -> Dict[str, Any]:
    """Load one input and run one suite group; domain errors are returned, not raised."""
    config = RunConfig.from_dict(run_settings)
    registry = AppConfig(**app_settings).create_registry()
    return _run_task(path, group, config, registry)


def _run_task(path: str, group: str, config: RunConfig, registry: Optional[EventRegistry]) -> Dict[str, Any]:
    started = time.perf_counter()
    outcome: Dict[str, Any] = {"path": path, "group": group, "instance": None, "suites": [], "error": None}
    try:
        instance = load_instance(Path(path), config.field)
        outcome["instance"] = instance.metadata()
        reports = run_group(group, instance, config, registry, lenient=config.command == "all")
        outcome["suites"] = [r.to_dict() for r in reports]
    except BudgetExceeded as e:
        publish(registry, {"type": EventType.BUDGET_EXCEEDED.value, "suite": group, "message": e.message})
        outcome["error"] = _error_dict(e, group)
    except BvextError as e:
        logger.error("%s on %s: %s", type(e).__name__, path, e.message)
        outcome["error"] = _error_dict(e, group)
    outcome["elapsed"] = time.perf_counter() - started
    return outcome


def assemble(path: str, command: str, settings: Dict[str, Any], outcomes: Sequence[Dict[str, Any]]) -> RunReport:
    """Merge the task outcomes of one input, in group order."""
    instance = next((o["instance"] for o in outcomes if o["instance"] is not None), None)
    report = RunReport(
        command=command,
        instance=instance or {"name": Path(path).stem, "path": path},
        settings=dict(settings),
    )
    for outcome in outcomes:
        report.suites.extend(SuiteReport.from_dict(s) for s in outcome["suites"])
        if report.error is None and outcome["error"] is not None:
            report.error = outcome["error"]
        report.timing[outcome["group"]] = outcome["elapsed"]
    report.timing["total"] = sum(o["elapsed"] for o in outcomes)
    return report


def run(config: RunConfig, app_config: Optional[AppConfig] = None) -> List[RunReport]:
    """Run every (input, group) task and return one RunReport per input."""
    app_config = app_config or AppConfig()
    groups = groups_for(config.command)
    tasks: List[Tuple[str, str]] = [(str(p), g) for p in config.inputs for g in groups]
    settings = config.to_dict()

    if config.jobs > 1 and len(tasks) > 1:
        app_settings = {
            "debug_logging": app_config.debug_logging,
            "log_level": app_config.log_level,
            "progress": app_config.progress,
        }
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            futures = [pool.submit(execute_task, path, group, settings, app_settings) for path, group in tasks]
            outcomes = [f.result() for f in futures]
    else:
        registry = app_config.create_registry()
        outcomes = [_run_task(path, group, config, registry) for path, group in tasks]

    reports = []
    for k, path in enumerate(str(p) for p in config.inputs):
        chunk = outcomes[k * len(groups):(k + 1) * len(groups)]
        reports.append(assemble(path, config.command, config.report_settings(), chunk))
    return reports


def exit_code_for(reports: Sequence[RunReport]) -> int:
    """Domain errors take precedence over failed checks."""
    for report in reports:
        if report.error is not None:
            return report.exit_code
    if any(not r.passed for r in reports):
        return EXIT_CHECK_FAILED
    return EXIT_OK


# =============================================================================
# Entry point
# =============================================================================

def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    app_config = AppConfig(progress=args.progress)
    logging.basicConfig(
        level=logging.DEBUG if app_config.debug_logging else getattr(logging, str(app_config.log_level).upper(), logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        config = RunConfig.from_args(args, app_config)
    except ValueError as e:
        print(f"bvext: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BvextError as e:
        print(f"bvext: error: {e.message}", file=sys.stderr)
        return e.exit_code

    reports = run(config, app_config)
    if config.output_format == "json":
        print(render_json(reports))
    else:
        print(render_table(reports))
    return exit_code_for(reports)


if __name__ == "__main__":
    sys.exit(main())
