"""Application configuration settings.

This module provides centralized configuration management including:
- AppConfig: Defaults pulled from BVEXT_* environment variables
- RunConfig: One validated CLI invocation (command, inputs, bounds, format)
- Registry construction with the logging handlers attached
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from bvext.constants import OUTPUT_FORMATS, default_max_degree, default_operad_bounds, default_operad_passes
from bvext.events import default_registry
from bvext.events.registry import EventRegistry
from bvext.exactfield import FieldSpec

from .env_loader import EnvLoader
from .events.handlers import ConsoleProgressHandler

COMMANDS = ("validate", "cohomology", "operad", "cyclic", "bv", "nakayama", "dual", "all")


@dataclass
class AppConfig:
    """Environment-level defaults shared by every invocation."""

    max_degree: Optional[int] = None
    operad_bounds: Optional[Tuple[int, ...]] = None
    jobs: int = 1
    field: Optional[str] = None
    output_format: str = "table"
    debug_logging: bool = False
    log_level: str = "INFO"
    progress: bool = False

    def __post_init__(self):
        # Load environment variables
        env = EnvLoader()
        defaults = env.get_run_defaults()
        debug = env.get_debug_settings()

        if self.max_degree is None:
            self.max_degree = defaults['max_degree']
        if self.operad_bounds is None:
            self.operad_bounds = defaults['operad_bounds']
        if defaults['jobs']:
            self.jobs = defaults['jobs']
        if self.field is None:
            self.field = defaults['field']
        if defaults['output_format'] in OUTPUT_FORMATS:
            self.output_format = defaults['output_format']
        self.debug_logging = self.debug_logging or debug['debug_logging']
        self.log_level = debug['log_level'] or self.log_level
        self.progress = self.progress or env.get_bool('BVEXT_PROGRESS', False)

    def create_registry(self) -> EventRegistry:
        """Registry with lifecycle, logging and debug handlers, plus console progress if enabled."""
        registry = default_registry(debug_logging=self.debug_logging, log_level=self.log_level)
        if self.progress:
            registry.register(ConsoleProgressHandler())
        return registry


@dataclass
class RunConfig:
    """A single invocation; command-line values override AppConfig defaults.

    Raises:
        ValueError: If a bound is not positive, the format is unknown or jobs < 1
        FieldError: If the field override names no supported field
    """

    command: str
    inputs: List[Path] = field(default_factory=list)
    max_degree: Optional[int] = None
    field_name: Optional[str] = None
    output_format: str = "table"
    jobs: int = 1
    operad_bounds: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command {self.command!r}; expected one of {', '.join(COMMANDS)}")
        if self.max_degree is not None and self.max_degree < 1:
            raise ValueError(f"--max-degree must be positive, got {self.max_degree}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"--format must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output_format!r}")
        if self.jobs < 1:
            raise ValueError(f"--jobs must be at least 1, got {self.jobs}")
        if self.operad_bounds is not None:
            if len(self.operad_bounds) != 3 or any(b < 1 for b in self.operad_bounds):
                raise ValueError(f"Operad bounds must be three positive integers, got {self.operad_bounds}")
        if self.field_name is not None:
            FieldSpec.parse(self.field_name)

    @classmethod
    def from_args(cls, args: Any, app_config: Optional[AppConfig] = None) -> "RunConfig":
        """Merge parsed arguments over environment defaults."""
        app_config = app_config or AppConfig()
        return cls(
            command=args.command,
            inputs=[Path(p) for p in args.inputs],
            max_degree=args.max_degree if args.max_degree is not None else app_config.max_degree,
            field_name=args.field if args.field is not None else app_config.field,
            output_format=args.format if args.format is not None else app_config.output_format,
            jobs=args.jobs if args.jobs is not None else app_config.jobs,
            operad_bounds=app_config.operad_bounds,
        )

    @classmethod
    def from_dict(cls, data: Dict[str, Any], inputs: Optional[List[Path]] = None) -> "RunConfig":
        """Inverse of to_dict; used to ship a config to worker processes."""
        bounds = data.get("operad_bounds")
        return cls(
            command=data["command"],
            inputs=list(inputs or []),
            max_degree=data.get("max_degree"),
            field_name=data.get("field"),
            output_format=data.get("format", "table"),
            jobs=data.get("jobs", 1),
            operad_bounds=tuple(bounds) if bounds is not None else None,
        )

    @property
    def field(self) -> Optional[FieldSpec]:
        return FieldSpec.parse(self.field_name) if self.field_name is not None else None

    def degree_for(self, algebra_dim: int) -> int:
        """Requested degree bound, or the dimension-based default."""
        return self.max_degree if self.max_degree is not None else default_max_degree(algebra_dim)

    def operad_bounds_for(self, algebra_dim: int) -> Tuple[int, int, int]:
        return tuple(self.operad_bounds) if self.operad_bounds is not None else default_operad_bounds(algebra_dim)

    def operad_passes_for(self, algebra_dim: int) -> List[Tuple[int, int, int]]:
        """Explicit bounds give a single pass; the defaults add arity-3 slot passes for dim A >= 4."""
        if self.operad_bounds is not None:
            return [tuple(self.operad_bounds)]
        return list(default_operad_passes(algebra_dim))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "max_degree": self.max_degree,
            "field": self.field_name,
            "format": self.output_format,
            "jobs": self.jobs,
            "operad_bounds": list(self.operad_bounds) if self.operad_bounds is not None else None,
        }

    def report_settings(self) -> Dict[str, Any]:
        """Settings echoed into a report, without the worker count."""
        settings = self.to_dict()
        settings.pop("jobs")
        return settings
