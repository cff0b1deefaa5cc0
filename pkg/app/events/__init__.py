"""Event handling for the command-line frontend."""

from bvext.events.registry import EventRegistry, EventType, EventHandler
from bvext.events.lifecycle import (
    LifecycleHandler,
    LoggingHandler,
    DebugHandler,
)
from .handlers import ConsoleProgressHandler

__all__ = [
    "EventRegistry",
    "EventType",
    "EventHandler",
    "ConsoleProgressHandler",
    "LifecycleHandler",
    "LoggingHandler",
    "DebugHandler",
]
