"""Environment variable loader with .env file support."""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger("bvext")


class EnvLoader:
    """Load BVEXT_* settings from a .env file and the system environment."""

    def __init__(self, env_file: Optional[Path] = None):
        self.env_vars: Dict[str, str] = {}
        self._load_env_file(env_file or Path(".env"))
        self._load_system_env()

    def _load_env_file(self, env_file: Path) -> None:
        """Load variables from the .env file if it exists."""
        if not env_file.exists():
            return

        try:
            with open(env_file, 'r') as f:
                for line in f:
                    line = line.strip()
                    if not line or line.startswith('#'):
                        continue

                    if '=' in line:
                        key, value = line.split('=', 1)
                        key = key.strip()
                        value = value.strip().strip('"').strip("'")
                        self.env_vars[key] = value
        except OSError as e:
            logger.warning("Could not read %s: %s", env_file, e)

    def _load_system_env(self) -> None:
        """Load system environment variables (they override .env file)."""
        for key, value in os.environ.items():
            self.env_vars[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        """Get environment variable value."""
        return self.env_vars.get(key, default)

    def get_bool(self, key: str, default: bool = False) -> bool:
        """Get boolean environment variable."""
        value = self.get(key, default)
        if isinstance(value, str):
            return value.lower() in ('true', '1', 'yes', 'on')
        return bool(value)

    def get_int(self, key: str, default: Optional[int] = None) -> Optional[int]:
        """Get integer environment variable; malformed values fall back to the default."""
        value = self.get(key)
        if value is None or value == "":
            return default
        try:
            return int(value)
        except (TypeError, ValueError):
            logger.warning("Ignoring non-integer %s=%r", key, value)
            return default

    def get_debug_settings(self) -> Dict[str, Any]:
        """Get debug and logging settings."""
        return {
            'debug_logging': self.get_bool('DEBUG_LOGGING', False),
            'log_level': self.get('LOG_LEVEL', 'INFO'),
        }

    def get_run_defaults(self) -> Dict[str, Any]:
        """Get suite defaults; unset keys come back as None."""
        bounds = self.get('BVEXT_OPERAD_BOUNDS')
        parsed_bounds = None
        if bounds:
            try:
                parsed_bounds = tuple(int(x) for x in bounds.split(','))
            except ValueError:
                logger.warning("Ignoring malformed BVEXT_OPERAD_BOUNDS=%r", bounds)
        return {
            'max_degree': self.get_int('BVEXT_MAX_DEGREE'),
            'jobs': self.get_int('BVEXT_JOBS'),
            'field': self.get('BVEXT_FIELD'),
            'output_format': self.get('BVEXT_FORMAT'),
            'operad_bounds': parsed_bounds,
        }
