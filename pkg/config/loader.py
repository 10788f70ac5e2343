import json
import os
from types import ModuleType
from typing import Any, Dict, Tuple

from utils.errors import ConfigError


def load_config_override(json_path: str) -> Dict[str, Any]:
    """
    Load configuration overrides from a JSON file.

    Args:
        json_path: Path to the JSON configuration file

    Returns:
        Dictionary of constant name -> new value

    Raises:
        FileNotFoundError: If the JSON file doesn't exist
        json.JSONDecodeError: If the JSON file is malformed
        ConfigError: If the top-level JSON value is not an object
    """
    if not os.path.exists(json_path):
        raise FileNotFoundError(f"Configuration file not found: {json_path}")

    with open(json_path, "r", encoding="utf-8") as f:
        overrides = json.load(f)

    if not isinstance(overrides, dict):
        raise ConfigError(f"{json_path}: expected a JSON object of NAME: value pairs")
    return overrides


def _coerce(key: str, value: Any, original: Any) -> Any:
    if original is None:
        return value
    original_type = type(original)
    if original_type is bool and isinstance(value, str):
        return value.lower() in ("true", "1", "yes", "on")
    # ints are accepted for float settings (e.g. "DEFAULT_TOLERANCE": 0)
    if original_type is float and isinstance(value, int) and not isinstance(value, bool):
        return float(value)
    try:
        return original_type(value)
    except (ValueError, TypeError) as e:
        raise ConfigError(f"Cannot convert {key}={value!r} to {original_type.__name__}: {e}") from e


def apply_config_overrides(config_module: ModuleType, overrides: Dict[str, Any]) -> Dict[str, Tuple[Any, Any]]:
    """
    Apply configuration overrides to a config module.

    Only existing UPPER_CASE constants may be overridden; each new value is
    converted to the type of the constant it replaces.

    Returns:
        {key: (old_value, new_value)} for every applied override
    """
    unknown = [key for key in overrides if not (key.isupper() and hasattr(config_module, key))]
    if unknown:
        raise ConfigError(f"Unknown configuration key(s): {', '.join(sorted(unknown))}")

    applied: Dict[str, Tuple[Any, Any]] = {}
    for key, value in overrides.items():
        original_value = getattr(config_module, key)
        converted_value = _coerce(key, value, original_value)
        setattr(config_module, key, converted_value)
        applied[key] = (original_value, converted_value)
    return applied
