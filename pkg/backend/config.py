"""
Environment-driven settings shared by the CLI and the HTTP service.
"""

import os
from dataclasses import dataclass

from backend.algebra.errors import ConfigError
from backend.algebra.exponents import monoid_by_name

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    default_m: int = 2
    default_monoid: str = "nat"
    default_trunc: int = 7
    log_level: str = "WARNING"
    port: int = 7860


def _int_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{name} must be at least {minimum}, got {value}")
    return value


def get_settings() -> Settings:
    """Read MQSYM_* variables (and PORT) from the environment."""
    monoid = os.getenv("MQSYM_DEFAULT_MONOID", "nat").strip().lower()
    try:
        monoid_by_name(monoid)
    except ValueError as e:
        raise ConfigError(f"MQSYM_DEFAULT_MONOID: {e}") from None

    log_level = os.getenv("MQSYM_LOG_LEVEL", "WARNING").strip().upper()
    if log_level not in _LOG_LEVELS:
        raise ConfigError(f"MQSYM_LOG_LEVEL must be one of {', '.join(_LOG_LEVELS)}")

    return Settings(
        default_m=_int_env("MQSYM_DEFAULT_M", 2, 1),
        default_monoid=monoid,
        default_trunc=_int_env("MQSYM_DEFAULT_TRUNC", 7, 1),
        log_level=log_level,
        port=_int_env("PORT", 7860, 1),
    )
