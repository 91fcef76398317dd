"""
Configuration settings for pi-forge.

Configuration hierarchy (later overrides earlier):
1. Default values (built-in)
2. config/default.toml, then config/local.toml (gitignored)
3. The file named by PI_FORGE_CONFIG_PATH, or an explicit path
4. Environment variables (PI_FORGE_* prefix)
5. Command-line arguments

Nested keys map as PI_FORGE_<SECTION>_<KEY>, e.g. PI_FORGE_SWEEP_WORKERS
sets ``sweep.workers``. PI_FORGE_PREC_BITS is accepted as a short alias
for PI_FORGE_PRECISION_PREC_BITS.

Example:
    >>> from pi_forge.config import get_settings
    >>>
    >>> settings = get_settings()
    >>> print(f"Precision: {settings.precision.prec_bits} bits")
    >>> ctx = settings.precision_context()
"""

from __future__ import annotations

import os
import tomllib
from collections.abc import Mapping
from functools import lru_cache
from pathlib import Path
from typing import Any

import structlog
from pydantic import BaseModel, ConfigDict, Field

from pi_forge.arith.precision import PrecisionContext

logger = structlog.get_logger(__name__)

ENV_PREFIX = "PI_FORGE_"
CONFIG_PATH_ENV = "PI_FORGE_CONFIG_PATH"
CONFIG_FILES = ("config/default.toml", "config/local.toml")

# Short environment names that bypass the <SECTION>_<KEY> scheme.
ENV_ALIASES: dict[str, tuple[str, str]] = {
    "PI_FORGE_PREC_BITS": ("precision", "prec_bits"),
}


class PrecisionSettings(BaseModel):
    """Floating-point precision settings."""

    model_config = ConfigDict(extra="ignore")

    prec_bits: int = Field(
        default=256,
        ge=16,
        description="Target precision in bits",
    )
    guard_bits: int = Field(
        default=16,
        ge=0,
        description="Extra working bits carried internally",
    )


class EvaluationSettings(BaseModel):
    """Series evaluation settings."""

    model_config = ConfigDict(extra="ignore")

    target_rel_err: float = Field(
        default=1e-30,
        gt=0,
        description="Relative error target for certified sums",
    )
    max_terms: int = Field(
        default=4000,
        ge=1,
        description="Cap on exact terms generated by one evaluation",
    )
    expansion_terms: int = Field(
        default=200,
        ge=1,
        description="Default term count for gamma-quotient diagnostics",
    )


class SweepSettings(BaseModel):
    """Identity sweep settings."""

    model_config = ConfigDict(extra="ignore")

    m_max: int = Field(default=50, ge=0, description="Default upper bound on m")
    k_max: int = Field(default=100, ge=0, description="Default upper bound on k")
    workers: int = Field(
        default=1,
        ge=1,
        description="Worker processes (1 = run in-process)",
    )


class OutputSettings(BaseModel):
    """Output settings."""

    model_config = ConfigDict(extra="ignore")

    format: str = Field(default="json", description="json, csv or table")


class LoggingSettings(BaseModel):
    """Logging settings."""

    model_config = ConfigDict(extra="ignore")

    level: str = Field(default="WARNING", description="Log level")
    format: str = Field(default="console", description="Output format")
    include_timestamp: bool = Field(default=True)
    include_location: bool = Field(default=False)


class Settings(BaseModel):
    """Main settings container."""

    model_config = ConfigDict(extra="ignore")

    name: str = Field(default="pi-forge")

    precision: PrecisionSettings = Field(default_factory=PrecisionSettings)
    evaluation: EvaluationSettings = Field(default_factory=EvaluationSettings)
    sweep: SweepSettings = Field(default_factory=SweepSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    def precision_context(self, prec_bits: int | None = None) -> PrecisionContext:
        """Build the PrecisionContext for the configured precision.

        Args:
            prec_bits: Optional override of ``precision.prec_bits``

        Returns:
            PrecisionContext
        """
        return PrecisionContext(
            precision_bits=prec_bits if prec_bits is not None else self.precision.prec_bits,
            guard_bits=self.precision.guard_bits,
        )


def _coerce(original: Any, value: str) -> Any:
    """Convert an environment string to the type of the default it replaces."""
    if isinstance(original, bool):
        return value.lower() in ("true", "1", "yes")
    if isinstance(original, int):
        return int(value)
    if isinstance(original, float):
        return float(value)
    return value


def _locate(config: dict[str, Any], name: str) -> tuple[str, str] | None:
    """Split an unprefixed lowercase name into (section, key)."""
    for section, values in config.items():
        if not isinstance(values, dict):
            continue
        head = f"{section}_"
        if name.startswith(head) and name[len(head) :] in values:
            return section, name[len(head) :]
    return None


def _apply_env_overrides(config: dict[str, Any], environ: Mapping[str, str]) -> dict[str, Any]:
    """Apply environment variable overrides.

    Environment variables with the PI_FORGE_ prefix override config values.
    Example: PI_FORGE_EVALUATION_MAX_TERMS -> evaluation.max_terms

    Args:
        config: Configuration dictionary (defaults)
        environ: Environment mapping

    Returns:
        Modified configuration
    """
    for key, value in sorted(environ.items()):
        if not key.startswith(ENV_PREFIX) or key == CONFIG_PATH_ENV:
            continue

        target = ENV_ALIASES.get(key) or _locate(config, key[len(ENV_PREFIX) :].lower())
        if target is None:
            logger.debug("unknown_env_setting", key=key)
            continue

        section, name = target
        try:
            config[section][name] = _coerce(config[section][name], value)
        except ValueError as e:
            raise ValueError(f"Invalid value for {key}: {value!r}") from e

    return config


def _find_config_files(environ: Mapping[str, str]) -> list[Path]:
    """Find configuration files in standard locations.

    Returns:
        List of config file paths (in order of priority)
    """
    cwd = Path.cwd()
    files = [cwd / name for name in CONFIG_FILES if (cwd / name).exists()]

    env_config = environ.get(CONFIG_PATH_ENV)
    if env_config:
        path = Path(env_config)
        if not path.exists():
            raise FileNotFoundError(f"{CONFIG_PATH_ENV} points to a missing file: {path}")
        files.append(path)

    return files


def _load_toml(path: Path) -> dict[str, Any]:
    with path.open("rb") as f:
        return tomllib.load(f)


def _merge_dicts(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Recursively merge dictionaries.

    Args:
        base: Base dictionary
        override: Override dictionary

    Returns:
        Merged dictionary
    """
    result = base.copy()

    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _merge_dicts(result[key], value)
        else:
            result[key] = value

    return result


def load_settings(
    environ: Mapping[str, str] | None = None,
    config_path: str | Path | None = None,
) -> Settings:
    """Load settings from defaults, TOML files and environment variables.

    Args:
        environ: Environment mapping (defaults to ``os.environ``)
        config_path: Explicit config file; replaces the standard locations

    Returns:
        Settings instance
    """
    environ = os.environ if environ is None else environ
    config = Settings().model_dump()

    files = [Path(config_path)] if config_path else _find_config_files(environ)
    for path in files:
        config = _merge_dicts(config, _load_toml(path))
        logger.debug("config_file_loaded", path=str(path))

    config = _apply_env_overrides(config, environ)
    return Settings(**config)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get cached settings instance.

    Returns:
        Settings instance (cached after first call)

    Example:
        >>> settings = get_settings()
        >>> print(settings.evaluation.target_rel_err)
    """
    return load_settings()


def reload_settings() -> Settings:
    """Reload settings (clears cache).

    Returns:
        Fresh Settings instance
    """
    get_settings.cache_clear()
    return get_settings()
