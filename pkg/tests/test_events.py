"""Event registry and handler tests

Requirements:
- Handlers run in priority order and only for the event types they accept
- Shorthand check and finding events are normalized
- Suites announce their lifecycle and every verdict
- Failed checks are logged as warnings, findings as info
- The console handler prints running, failure and verdict lines
"""

import io
import logging

from app.events.handlers import ConsoleProgressHandler
from bvext.algcore import frobenius_structure
from bvext.cyclic import cyclic_operad_report, cyclic_structure, frobenius_contraaction
from bvext.events import (
    DebugHandler,
    EventHandler,
    EventRegistry,
    EventType,
    LifecycleHandler,
    LoggingHandler,
    default_registry,
    publish,
)
from bvext.hochschild import EndomorphismOperad, algebra_bimodule


class _Recorder(EventHandler):
    def __init__(self, name, priority, types=None):
        self.name = name
        self._priority = priority
        self.types = types
        self.calls = []

    @property
    def priority(self):
        return self._priority

    def can_handle(self, event_type):
        return self.types is None or event_type in self.types

    def handle(self, event):
        self.calls.append(event)
        return {"handled_by": self.name}


def _lifecycle(registry):
    return next(h for h in registry.get_handlers(EventType.SUITE_START.value) if isinstance(h, LifecycleHandler))


class TestEventRegistry:
    """Routing and normalization"""

    def setup_method(self):
        self.registry = EventRegistry()

    def test_priority_order(self):
        self.registry.register(_Recorder("late", 90))
        self.registry.register(_Recorder("early", 10))
        results = self.registry.process_event({"type": "suite_start", "suite": "s"})
        assert [r["handled_by"] for r in results] == ["early", "late"]

    def test_type_filter(self):
        only_checks = _Recorder("checks", 10, {EventType.CHECK.value})
        self.registry.register(only_checks)
        self.registry.process_event({"type": "suite_start", "suite": "s"})
        assert only_checks.calls == []

    def test_check_shorthand(self):
        recorder = _Recorder("r", 10)
        self.registry.register(recorder)
        self.registry.process_event({"check": {"name": "x", "passed": True}, "suite": "s"})
        assert recorder.calls[0]["type"] == EventType.CHECK.value

    def test_finding_shorthand(self):
        recorder = _Recorder("r", 10)
        self.registry.register(recorder)
        self.registry.process_event({"finding": "dims differ", "suite": "s"})
        event = recorder.calls[0]
        assert event["type"] == EventType.FINDING.value
        assert event["message"] == "dims differ"

    def test_publish_without_registry(self):
        assert publish(None, {"type": "suite_start"}) == []


class TestLifecycle:
    """Suites publishing through default_registry"""

    def test_cyclic_operad_suite_events(self, dual_numbers):
        registry = default_registry()
        fs = frobenius_structure(dual_numbers)
        cs = cyclic_structure(frobenius_contraaction(fs, algebra_bimodule(dual_numbers)), EndomorphismOperad(dual_numbers))
        report = cyclic_operad_report(cs, 1, 1, registry)
        lifecycle = _lifecycle(registry)
        assert lifecycle.started == ["cyclic_operad"]
        assert lifecycle.completed == ["cyclic_operad"]
        assert lifecycle.total_checks == len(report.checks)
        assert lifecycle.failed_checks == 0

    def test_failed_check_counts(self):
        handler = LifecycleHandler()
        handler.handle({"type": "check", "check": {"passed": False}})
        handler.handle({"type": "check", "check": {"passed": False, "informational": True}})
        assert handler.total_checks == 2
        assert handler.failed_checks == 1


class TestLoggingHandler:
    """Structured logging of verdicts"""

    def test_failure_logged_as_warning(self, caplog):
        handler = LoggingHandler(debug_logging=False)
        with caplog.at_level(logging.INFO, logger="bvext"):
            handler.handle({"type": "check", "suite": "bv", "check": {"name": "bv_identity", "passed": False, "witness": [1, 0]}})
            handler.handle({"type": "finding", "suite": "bv", "message": "skipped"})
        levels = [r.levelname for r in caplog.records]
        assert "WARNING" in levels
        assert "INFO" in levels
        assert "bv_identity" in caplog.text

    def test_debug_handler_only_when_enabled(self):
        assert not DebugHandler(debug_enabled=False).can_handle("check")
        handler = DebugHandler(debug_enabled=True)
        for k in range(105):
            handler.handle({"type": "check", "k": k})
        assert len(handler.event_log) == 100
        assert handler.event_log[0]["event_data"]["k"] == 5


class TestConsoleProgressHandler:
    """Progress lines on a stream"""

    def setup_method(self):
        self.stream = io.StringIO()
        self.handler = ConsoleProgressHandler(stream=self.stream)

    def test_lines(self):
        self.handler.handle({"type": "suite_start", "suite": "bv"})
        self.handler.handle({"type": "check", "suite": "bv", "check": {"name": "bv_identity", "passed": False, "witness": [[1, 0], [2, 1]]}})
        self.handler.handle({"type": "suite_complete", "suite": "bv", "passed": False})
        assert self.handler.lines == [
            "[bv] running",
            "[bv] bv_identity: FAIL witness [[1,0],[2,1]]",
            "[bv] FAIL",
        ]
        assert self.stream.getvalue().count("\n") == 3

    def test_passing_and_informational_checks_are_quiet(self):
        assert self.handler.handle({"type": "check", "suite": "s", "check": {"name": "a", "passed": True}}) is None
        assert self.handler.handle({"type": "check", "suite": "s", "check": {"name": "b", "passed": False, "informational": True}}) is None
        assert self.stream.getvalue() == ""

    def test_show_passing(self):
        handler = ConsoleProgressHandler(stream=self.stream, show_passing=True)
        result = handler.handle({"type": "check", "suite": "s", "check": {"name": "a", "passed": True}})
        assert result == {"progress": "[s] a: ok"}

    def test_budget_line(self):
        self.handler.handle({"type": "budget_exceeded", "suite": "cohomology", "message": "dim C^6 = 16384 exceeds the cap 4096"})
        assert self.handler.lines[-1].startswith("[cohomology] budget exceeded:")

    def test_registered_through_registry(self):
        registry = EventRegistry()
        registry.register(self.handler)
        results = registry.process_event({"finding": "dims match", "suite": "nakayama"})
        assert results == [{"progress": "[nakayama] dims match"}]
