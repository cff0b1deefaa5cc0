"""Suite event routing and logging handlers."""

from .registry import EventHandler, EventRegistry, EventType, publish, publish_check
from .lifecycle import DebugHandler, LifecycleHandler, LoggingHandler, default_registry

__all__ = [
    "EventHandler",
    "EventRegistry",
    "EventType",
    "publish",
    "publish_check",
    "DebugHandler",
    "LifecycleHandler",
    "LoggingHandler",
    "default_registry",
]
