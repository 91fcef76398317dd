"""
Utility functions for pi-forge.
"""

from __future__ import annotations

from .logging import bind_context, clear_context, configure_from_settings, get_logger, setup_logging

__all__ = [
    "bind_context",
    "clear_context",
    "configure_from_settings",
    "get_logger",
    "setup_logging",
]
