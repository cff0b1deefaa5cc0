"""Lifecycle and logging-related event handlers.

This module provides event handlers for:
- LifecycleHandler: Suite start/complete bookkeeping and failure counts
- LoggingHandler: Structured event logging through the logging module
- DebugHandler: Debug information collection
"""
import logging
import os
from typing import Any, Dict, List, Optional

from .registry import EventHandler, EventRegistry, EventType

logger = logging.getLogger("bvext")


class LifecycleHandler(EventHandler):
    """Track which suites ran and how many checks failed."""

    def __init__(self):
        self.started: List[str] = []
        self.completed: List[str] = []
        self.failed_checks = 0
        self.total_checks = 0

    @property
    def priority(self) -> int:
        return 50  # Medium priority

    def can_handle(self, event_type: str) -> bool:
        """Handle lifecycle and verdict events."""
        return event_type in {
            EventType.SUITE_START.value,
            EventType.SUITE_COMPLETE.value,
            EventType.CHECK.value,
        }

    def handle(self, event: Dict[str, Any]) -> Optional[Dict[str, Any]]:
        event_type = event.get("type")
        suite = event.get("suite", "")

        if event_type == EventType.SUITE_START.value:
            self.started.append(suite)
        elif event_type == EventType.SUITE_COMPLETE.value:
            self.completed.append(suite)
        else:
            check = event.get("check", {})
            self.total_checks += 1
            if not check.get("passed", False) and not check.get("informational", False):
                self.failed_checks += 1

        return {"lifecycle_processed": event_type}


class LoggingHandler(EventHandler):
    """Structured logging handler for every event."""

    def __init__(self, debug_logging: Optional[bool] = None, log_level: str = "INFO"):
        if debug_logging is None:
            debug_logging = os.environ.get("DEBUG_LOGGING", "false").lower() in ("true", "1", "yes", "on")
        self.debug_logging = debug_logging
        logger.setLevel(logging.DEBUG if debug_logging else getattr(logging, log_level.upper(), logging.INFO))

    @property
    def priority(self) -> int:
        return 80  # Lower priority so other handlers execute first

    def can_handle(self, event_type: str) -> bool:
        """Log every event regardless of type."""
        return True

    def handle(self, event: Dict[str, Any]) -> Optional[Dict[str, Any]]:
        event_type = event.get("type")
        suite = event.get("suite", "")

        if event_type == EventType.CHECK.value:
            check = event.get("check", {})
            verdict = "PASS" if check.get("passed") else "FAIL"
            if check.get("passed"):
                logger.debug("%s %s: %s (%d cases)", suite, check.get("name"), verdict, check.get("cases", 0))
            elif check.get("informational"):
                logger.info("%s %s: finding, witness %s", suite, check.get("name"), check.get("witness"))
            else:
                logger.warning("%s %s: %s, witness %s", suite, check.get("name"), verdict, check.get("witness"))
        elif event_type == EventType.FINDING.value:
            logger.info("%s finding: %s", suite, event.get("message"))
        elif event_type == EventType.BUDGET_EXCEEDED.value:
            logger.error("%s budget exceeded: %s", suite, event.get("message"))
        elif self.debug_logging:
            logger.debug("EVENT: %s", event)

        return None


class DebugHandler(EventHandler):
    """Simplified debugging handler that stores recent events."""

    def __init__(self, debug_enabled: bool = False):
        self.debug_enabled = debug_enabled
        self.event_log = []

    @property
    def priority(self) -> int:
        return 95  # Lowest priority

    def can_handle(self, event_type: str) -> bool:
        """Only process events when debug mode is enabled."""
        return self.debug_enabled

    def handle(self, event: Dict[str, Any]) -> Optional[Dict[str, Any]]:
        if not self.debug_enabled:
            return None

        self.event_log.append({
            "event_type": event.get("type"),
            "event_data": event.copy(),
        })

        # Limit to the latest 100 events
        if len(self.event_log) > 100:
            self.event_log.pop(0)

        return None


def default_registry(debug_logging: bool = False, log_level: str = "INFO") -> EventRegistry:
    """Registry with the lifecycle, logging and debug handlers attached."""
    registry = EventRegistry()
    registry.register(LifecycleHandler())
    registry.register(LoggingHandler(debug_logging=debug_logging, log_level=log_level))
    registry.register(DebugHandler(debug_enabled=debug_logging))
    return registry
