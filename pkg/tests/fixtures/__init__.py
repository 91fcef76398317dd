"""
Test fixtures for pi-forge.

This module provides:
- RecordFactory: Create output records with sensible defaults
"""

from tests.fixtures.factories import RecordFactory

__all__ = [
    "RecordFactory",
]
