"""
Structured logging for pi-forge.

Logs go to stderr through the stdlib bridge; stdout carries only output
records, so piping a run into a file never mixes in log lines.

Example:
    >>> from pi_forge.utils import setup_logging, get_logger
    >>>
    >>> setup_logging(level="INFO", format="json")
    >>> logger = get_logger(__name__)
    >>> logger.info("family_evaluated", m=0, k=2, terms_used=41)
"""

from __future__ import annotations

import logging
import sys
from fractions import Fraction
from typing import TYPE_CHECKING, Any

import structlog

if TYPE_CHECKING:
    from collections.abc import MutableMapping

    from structlog.typing import Processor

    from pi_forge.config import LoggingSettings


def render_numbers(
    _logger: Any, _method: str, event_dict: MutableMapping[str, Any]
) -> MutableMapping[str, Any]:
    """Turn exact rationals and mpmath numbers into strings.

    JSONRenderer cannot serialise either type. mpf values keep the digits
    of their working precision.
    """
    for key, value in event_dict.items():
        if isinstance(value, Fraction):
            event_dict[key] = str(value)
        elif hasattr(value, "_mpf_") or hasattr(value, "_mpc_"):
            event_dict[key] = str(value)
    return event_dict


def _processor_chain(
    format: str, *, include_timestamp: bool, include_location: bool
) -> list[Processor]:
    chain: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
    ]
    if include_timestamp:
        chain.append(structlog.processors.TimeStamper(fmt="iso", utc=True))
    if include_location:
        chain.append(
            structlog.processors.CallsiteParameterAdder(
                [
                    structlog.processors.CallsiteParameter.MODULE,
                    structlog.processors.CallsiteParameter.FUNC_NAME,
                ]
            )
        )
    chain += [
        structlog.stdlib.PositionalArgumentsFormatter(),
        render_numbers,
        structlog.processors.format_exc_info,
    ]

    if format == "json":
        chain.append(structlog.processors.JSONRenderer(sort_keys=True))
    else:
        chain.append(structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()))
    return chain


def setup_logging(
    level: str = "WARNING",
    format: str = "console",
    *,
    include_timestamp: bool = True,
    include_location: bool = False,
) -> None:
    """Route structlog through stdlib logging on stderr.

    Args:
        level: Threshold name (DEBUG, INFO, WARNING, ERROR)
        format: "console" for humans, "json" for one object per line
        include_timestamp: Add an ISO-8601 UTC ``timestamp`` key
        include_location: Add the emitting module and function
    """
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=logging.getLevelNamesMapping()[level.upper()],
        force=True,
    )
    structlog.configure(
        processors=_processor_chain(
            format,
            include_timestamp=include_timestamp,
            include_location=include_location,
        ),
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        # CliRunner swaps stderr between invocations
        cache_logger_on_first_use=False,
    )


def configure_from_settings(settings: LoggingSettings, *, level: str | None = None) -> None:
    """Apply a LoggingSettings section, optionally overriding its level."""
    setup_logging(
        level=level or settings.level,
        format=settings.format,
        include_timestamp=settings.include_timestamp,
        include_location=settings.include_location,
    )


def get_logger(name: str | None = None) -> structlog.stdlib.BoundLogger:
    """Return a bound logger, usually ``get_logger(__name__)``."""
    logger: structlog.stdlib.BoundLogger = structlog.get_logger(name)
    return logger


def bind_context(**kwargs: Any) -> None:
    """Attach keys to every later log call in this context.

    Example:
        >>> bind_context(command="identity", identity_id="IV2")
    """
    structlog.contextvars.bind_contextvars(**kwargs)


def clear_context() -> None:
    structlog.contextvars.clear_contextvars()
