"""
Configuration for ringbasis runs.

Values come from the defaults below, then an optional JSON file, then
RINGBASIS_* environment variables. Command-line flags are applied on top
by ringbasis.main.
"""

import os
import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "config.json"
OUTPUT_FORMATS = ("json", "text")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _env_flag(value: str) -> bool:
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


# (variable, config key, converter)
ENV_VARIABLES: Tuple[Tuple[str, str, Callable[[str], Any]], ...] = (
    ('RINGBASIS_LOG_LEVEL', 'log_level', lambda v: v.strip().upper()),
    ('RINGBASIS_LOG_FILE', 'log_file', str),
    ('RINGBASIS_OUTPUT', 'output_format', lambda v: v.strip().lower()),
    ('RINGBASIS_JSON_INDENT', 'json_indent', int),
    # enumeration cap for infinite-rank quotients
    ('RINGBASIS_DEGREE_CAP', 'degree_cap', int),
    # critical-pair budget, 0 = unlimited
    ('RINGBASIS_MAX_PAIRS', 'max_pairs', int),
    ('RINGBASIS_CHECK', 'check', _env_flag),
)


def load_config_from_env() -> Dict[str, Any]:
    """
    Load configuration from environment variables.

    Variables that fail to convert are skipped with a warning.

    Returns:
        Dictionary with configuration values from environment
    """
    config: Dict[str, Any] = {}
    for variable, key, convert in ENV_VARIABLES:
        raw = os.getenv(variable)
        if not raw:
            continue
        try:
            config[key] = convert(raw)
        except ValueError:
            logger.warning(f"Ignoring {variable}={raw!r}: not a valid value for {key}")
    return config


def validate_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """
    Replace out-of-range settings by their defaults.

    Args:
        config: Merged configuration

    Returns:
        The same dictionary, corrected in place
    """
    defaults = get_default_config()
    if config.get('output_format') not in OUTPUT_FORMATS:
        logger.warning(f"Unknown output format {config.get('output_format')!r}, using json")
        config['output_format'] = defaults['output_format']
    if str(config.get('log_level', '')).upper() not in LOG_LEVELS:
        logger.warning(f"Unknown log level {config.get('log_level')!r}, using {defaults['log_level']}")
        config['log_level'] = defaults['log_level']
    for key in ('degree_cap', 'json_indent'):
        value = config.get(key)
        if value is not None and (not isinstance(value, int) or value < 0):
            logger.warning(f"{key} must be a non-negative integer, got {value!r}")
            config[key] = defaults[key]
    max_pairs = config.get('max_pairs')
    if not isinstance(max_pairs, int) or max_pairs < 0:
        logger.warning(f"max_pairs must be a non-negative integer, got {max_pairs!r}")
        config['max_pairs'] = defaults['max_pairs']
    return config


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from defaults, a JSON file and environment variables.
    Environment variables take precedence over file configuration.

    Args:
        config_path: Path to JSON configuration file (optional)

    Returns:
        Merged and validated configuration dictionary
    """
    config = get_default_config()

    if config_path:
        config_file = Path(config_path)
        if config_file.exists():
            try:
                file_config = json.loads(config_file.read_text(encoding='utf-8'))
                # underscore keys and the descriptions block only document the file
                config.update({
                    key: value for key, value in file_config.items()
                    if not key.startswith('_') and key != 'descriptions'
                })
                logger.info(f"Configuration loaded from {config_path}")
            except (OSError, ValueError) as e:
                logger.error(f"Error loading config file {config_path}: {e}")
        elif config_path == DEFAULT_CONFIG_PATH:
            logger.debug(f"No {config_path} in the working directory, using defaults")
        else:
            logger.warning(f"Config file {config_path} not found, using defaults")

    env_config = load_config_from_env()
    config.update(env_config)
    if env_config:
        logger.info(f"Configuration overridden by {sorted(env_config)} from the environment")

    return validate_config(config)


def get_default_config() -> Dict[str, Any]:
    """Default settings: quiet logging, single-line JSON, no limits."""
    return {
        "log_level": "WARNING",
        "log_file": "",  # empty disables the file handler
        "output_format": "json",
        "json_indent": None,
        "degree_cap": None,
        "max_pairs": 0,
        "check": False,
    }
