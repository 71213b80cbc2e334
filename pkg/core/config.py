"""
Configuration loader for coxeter-cubes.

Settings are resolved with a priority chain:
1. Environment variables
2. ``coxeter_cubes.env`` file (KEY=VALUE lines)
3. Built-in defaults
"""

import logging
import os
from pathlib import Path
from typing import Optional

# Global configuration storage
_config: dict[str, str] = {}
_config_loaded: bool = False
logger = logging.getLogger(__name__)

ENUMERATION_BOUND_KEY = "COXCUBE_ENUMERATION_BOUND"
EXHAUSTIVE_RANK_KEY = "COXCUBE_EXHAUSTIVE_RANK"
ROOT_CAP_KEY = "COXCUBE_ROOT_CAP"
LOG_LEVEL_KEY = "COXCUBE_LOG_LEVEL"

CONFIG_KEYS = [ENUMERATION_BOUND_KEY, EXHAUSTIVE_RANK_KEY, ROOT_CAP_KEY, LOG_LEVEL_KEY]

DEFAULT_ENUMERATION_BOUND = 10
DEFAULT_EXHAUSTIVE_RANK = 5
DEFAULT_ROOT_CAP = 10_000
DEFAULT_LOG_LEVEL = "WARNING"

_INTEGER_KEYS = {
    ENUMERATION_BOUND_KEY: DEFAULT_ENUMERATION_BOUND,
    EXHAUSTIVE_RANK_KEY: DEFAULT_EXHAUSTIVE_RANK,
    ROOT_CAP_KEY: DEFAULT_ROOT_CAP,
}
_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def get_config_path() -> Path:
    """Get the path to the coxeter_cubes.env file."""
    module_dir = Path(__file__).parent.parent
    return module_dir / "coxeter_cubes.env"


def load_config(config_path: Optional[Path] = None) -> dict[str, str]:
    """
    Load configuration from the environment and the settings file.

    Format: KEY=VALUE, one per line
    Lines starting with # are comments
    Empty lines are ignored

    Args:
        config_path: Optional path to config file. Defaults to coxeter_cubes.env

    Returns:
        Dictionary of configuration values
    """
    global _config, _config_loaded

    if _config_loaded and config_path is None:
        return _config

    path = config_path or get_config_path()

    config = _load_from_env()

    if path.exists():
        file_config = _load_from_file(path)
        for key, value in file_config.items():
            if key not in config:
                config[key] = value

    _config = config
    _config_loaded = True

    if config:
        _validate_config(config)

    return config


def _load_from_file(path: Path) -> dict[str, str]:
    """Load configuration from a file."""
    config = {}

    with open(path, "r", encoding="utf-8") as f:
        for line_num, line in enumerate(f, 1):
            line = line.strip()

            # Skip empty lines and comments
            if not line or line.startswith("#"):
                continue

            if "=" not in line:
                logger.warning("Invalid line %s in %s: %s", line_num, path, line)
                continue

            key, value = line.split("=", 1)
            key = key.strip()
            value = value.strip()

            if value.startswith('"') and value.endswith('"'):
                value = value[1:-1]
            elif value.startswith("'") and value.endswith("'"):
                value = value[1:-1]

            config[key] = value

    return config


def _load_from_env() -> dict[str, str]:
    """Load configuration from environment variables."""
    config = {}
    for key in CONFIG_KEYS:
        value = os.environ.get(key)
        if value:
            config[key] = value
    return config


def _validate_config(config: dict[str, str]) -> None:
    """Log warnings for values that will fall back to their defaults."""
    for key in _INTEGER_KEYS:
        if key in config and _parse_positive_int(config[key]) is None:
            logger.warning("Ignoring %s=%r: expected a positive integer", key, config[key])

    level = config.get(LOG_LEVEL_KEY)
    if level is not None and level.upper() not in _LOG_LEVELS:
        logger.warning("Ignoring %s=%r: unknown log level", LOG_LEVEL_KEY, level)

    unknown = [k for k in config if k not in CONFIG_KEYS]
    if unknown:
        logger.info("Unrecognized configuration keys: %s", ", ".join(sorted(unknown)))


def _parse_positive_int(value: str) -> Optional[int]:
    try:
        parsed = int(value)
    except (TypeError, ValueError):
        return None
    return parsed if parsed > 0 else None


def _get_int(key: str) -> int:
    default = _INTEGER_KEYS[key]
    raw = load_config().get(key)
    if raw is None:
        return default
    parsed = _parse_positive_int(raw)
    if parsed is None:
        logger.warning("Using default %s=%s", key, default)
        return default
    return parsed


def get_enumeration_bound() -> int:
    """Largest rank accepted by partition, cube-class and edge-set enumeration."""
    return _get_int(ENUMERATION_BOUND_KEY)


def get_exhaustive_rank() -> int:
    """Largest rank for operations that scan every element of the group."""
    return _get_int(EXHAUSTIVE_RANK_KEY)


def get_root_cap() -> int:
    """Default cap on the number of roots the numeric engine will generate."""
    return _get_int(ROOT_CAP_KEY)


def get_log_level() -> str:
    """Log level name used by the command-line entry point."""
    level = load_config().get(LOG_LEVEL_KEY, DEFAULT_LOG_LEVEL).upper()
    if level not in _LOG_LEVELS:
        return DEFAULT_LOG_LEVEL
    return level


def clear_config_cache() -> None:
    """Clear the configuration cache (useful for testing)."""
    global _config, _config_loaded
    _config = {}
    _config_loaded = False
