"""Run reports and their table and JSON renderings.

This module provides:
- RunReport: Suites, metadata, error and timing of one input file
- render_json / parse_json: Versioned, deterministic JSON output
- render_table: Human-readable summary
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from bvext.constants import EXIT_CHECK_FAILED, EXIT_OK, SCHEMA_VERSION
from bvext.errors import SchemaError
from bvext.results import SuiteReport

TIMING_KEY = "timing"


@dataclass
class RunReport:
    """Everything one command produced for one input."""

    command: str
    instance: Dict[str, Any] = field(default_factory=dict)
    settings: Dict[str, Any] = field(default_factory=dict)
    suites: List[SuiteReport] = field(default_factory=list)
    error: Optional[Dict[str, Any]] = None
    timing: Dict[str, float] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return self.error is None and all(s.passed for s in self.suites)

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return int(self.error.get("exit_code", EXIT_CHECK_FAILED))
        return EXIT_OK if self.passed else EXIT_CHECK_FAILED

    def failures(self) -> List[str]:
        """Names of the failed checks, prefixed by their suite."""
        out = []
        for suite in self.suites:
            for check in suite.checks:
                if not check.passed and not check.informational:
                    out.append(f"{suite.suite}.{check.name}")
        return out

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        data = {
            "schema_version": self.schema_version,
            "command": self.command,
            "instance": dict(self.instance),
            "settings": dict(self.settings),
            "passed": self.passed,
            "suites": [s.to_dict() for s in self.suites],
            "error": self.error,
        }
        if include_timing:
            data[TIMING_KEY] = dict(self.timing)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunReport":
        """Inverse of to_dict.

        Raises:
            SchemaError: If the schema version is not supported
        """
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise SchemaError(f"Unsupported report schema_version {version!r}")
        return cls(
            command=data["command"],
            instance=dict(data.get("instance", {})),
            settings=dict(data.get("settings", {})),
            suites=[SuiteReport.from_dict(s) for s in data.get("suites", [])],
            error=data.get("error"),
            timing=dict(data.get(TIMING_KEY, {})),
            schema_version=version,
        )


# =============================================================================
# JSON
# =============================================================================

def render_json(reports: Sequence[RunReport], include_timing: bool = True) -> str:
    """One report as an object; several inside {"schema_version", "reports"}."""
    if len(reports) == 1:
        payload: Any = reports[0].to_dict(include_timing)
    else:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "reports": [r.to_dict(include_timing) for r in reports],
        }
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def parse_json(text: str) -> List[RunReport]:
    """Parse the output of render_json back into reports."""
    data = json.loads(text)
    if "reports" in data:
        if data.get("schema_version") != SCHEMA_VERSION:
            raise SchemaError(f"Unsupported report schema_version {data.get('schema_version')!r}")
        return [RunReport.from_dict(r) for r in data["reports"]]
    return [RunReport.from_dict(data)]


# =============================================================================
# Table
# =============================================================================

def _verdict(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _format_witness(witness: Any) -> str:
    if witness is None:
        return ""
    return json.dumps(witness, ensure_ascii=False, separators=(",", ":"))


def render_table(reports: Sequence[RunReport], include_timing: bool = False) -> str:
    """Plain-text summary: one block per input, one row per check."""
    blocks = []
    for report in reports:
        meta = report.instance
        lines = [
            f"== {meta.get('name', '?')} ({meta.get('kind', '?')} over {meta.get('field', '?')}, "
            f"dim {meta.get('dim', '?')}) :: {report.command}"
        ]
        if report.error is not None:
            lines.append(f"   ERROR {report.error.get('error_type')}: {report.error.get('error_message')}")
        for suite in report.suites:
            lines.append(f"-- {suite.suite}: {_verdict(suite.passed)}")
            for key, dims in suite.dimensions.items():
                lines.append(f"   {key} dims: ({', '.join(str(x) for x in dims)})")
            width = max((len(c.name) for c in suite.checks), default=0)
            for check in suite.checks:
                verdict = f"INFO {'yes' if check.passed else 'no'}" if check.informational else _verdict(check.passed)
                row = f"   {check.name.ljust(width)}  {verdict:<8} {check.cases:>6}"
                witness = "" if check.passed else _format_witness(check.witness)
                if witness:
                    row += f"  witness {witness}"
                lines.append(row.rstrip())
            for finding in suite.findings:
                lines.append(f"   * {finding}")
        if include_timing and report.timing:
            lines.append(f"   time: {report.timing.get('total', 0.0):.2f}s")
        lines.append(f"== verdict: {_verdict(report.passed)}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)
