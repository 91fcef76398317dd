"""
Configuration management for pi-forge.

Configuration hierarchy:
1. Default values (built-in)
2. TOML files (config/default.toml, config/local.toml, PI_FORGE_CONFIG_PATH)
3. Environment variables (PI_FORGE_* prefix)
4. Command-line arguments

Example:
    >>> from pi_forge.config import get_settings
    >>>
    >>> settings = get_settings()
    >>> print(f"Target: {settings.evaluation.target_rel_err}")
"""

from pi_forge.config.settings import (
    EvaluationSettings,
    LoggingSettings,
    OutputSettings,
    PrecisionSettings,
    Settings,
    SweepSettings,
    get_settings,
    load_settings,
    reload_settings,
)

__all__ = [
    "EvaluationSettings",
    "LoggingSettings",
    "OutputSettings",
    "PrecisionSettings",
    "Settings",
    "SweepSettings",
    "get_settings",
    "load_settings",
    "reload_settings",
]
