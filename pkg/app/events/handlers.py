"""Console event handler for command-line runs.

This module provides the handler that turns suite events into progress
lines on a text stream (stderr by default):
- one line when a suite starts
- one line per failed check, with its witness
- one line per finding or exceeded budget
- a verdict line when a suite completes
"""

from __future__ import annotations

import json
import sys
from typing import Any, Dict, List, Optional, TextIO

from bvext.events.registry import EventHandler, EventType


__all__ = ["ConsoleProgressHandler"]


class ConsoleProgressHandler(EventHandler):
    """Write compact progress for every suite event."""

    def __init__(self, stream: Optional[TextIO] = None, show_passing: bool = False):
        self.stream = stream
        self.show_passing = show_passing
        self.lines: List[str] = []

    @property
    def priority(self) -> int:
        return 90  # after logging, before the debug collector

    def can_handle(self, event_type: str) -> bool:
        return event_type in {
            EventType.SUITE_START.value,
            EventType.SUITE_COMPLETE.value,
            EventType.CHECK.value,
            EventType.FINDING.value,
            EventType.BUDGET_EXCEEDED.value,
        }

    def handle(self, event: Dict[str, Any]) -> Optional[Dict[str, Any]]:
        line = self._format(event)
        if line is None:
            return None
        self.lines.append(line)
        stream = self.stream or sys.stderr
        stream.write(line + "\n")
        stream.flush()
        return {"progress": line}

    def _format(self, event: Dict[str, Any]) -> Optional[str]:
        event_type = event.get("type")
        suite = event.get("suite", "")

        if event_type == EventType.SUITE_START.value:
            return f"[{suite}] running"
        if event_type == EventType.SUITE_COMPLETE.value:
            return f"[{suite}] {'PASS' if event.get('passed') else 'FAIL'}"
        if event_type == EventType.CHECK.value:
            check = event.get("check", {})
            if check.get("informational"):
                return None
            if check.get("passed"):
                return f"[{suite}] {check.get('name')}: ok" if self.show_passing else None
            witness = json.dumps(check.get("witness"), ensure_ascii=False, separators=(",", ":"))
            return f"[{suite}] {check.get('name')}: FAIL witness {witness}"
        if event_type == EventType.FINDING.value:
            return f"[{suite}] {event.get('message')}"
        if event_type == EventType.BUDGET_EXCEEDED.value:
            return f"[{suite}] budget exceeded: {event.get('message')}"
        return None
