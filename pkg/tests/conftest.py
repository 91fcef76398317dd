"""
Pytest configuration and shared fixtures for pi-forge.

This module provides:
- Precision contexts at the precisions the tests work at
- Settings isolation from the caller's PI_FORGE_* environment
- A click CliRunner
- OutputRecord factories for export and model tests

Example usage in tests:
    def test_something(ctx128, record_factory):
        record = record_factory.identity(m=1, k=2)
        assert record.results["holds"] is True
"""

from __future__ import annotations

import os
from collections.abc import Iterator

import pytest
from click.testing import CliRunner

from pi_forge.arith import PrecisionContext
from pi_forge.config import get_settings
from tests.fixtures.factories import RecordFactory

# ============================================================================
# PRECISION FIXTURES
# ============================================================================


@pytest.fixture
def ctx64() -> PrecisionContext:
    """Low precision for quick smoke checks."""
    return PrecisionContext(precision_bits=64)


@pytest.fixture
def ctx128() -> PrecisionContext:
    """128-bit target precision (16 guard bits)."""
    return PrecisionContext(precision_bits=128)


@pytest.fixture
def ctx256() -> PrecisionContext:
    """256-bit target precision, the library default."""
    return PrecisionContext(precision_bits=256)


# ============================================================================
# SETTINGS FIXTURES
# ============================================================================


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Strip PI_FORGE_* variables and reset the settings cache around each test.

    Yields:
        Nothing; settings are rebuilt from defaults on first use
    """
    for key in list(os.environ):
        if key.startswith("PI_FORGE_"):
            monkeypatch.delenv(key, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


# ============================================================================
# CLI FIXTURES
# ============================================================================


@pytest.fixture
def cli_runner() -> CliRunner:
    """Provide a click CliRunner (stdout and stderr kept apart)."""
    return CliRunner()


# ============================================================================
# RECORD FIXTURES
# ============================================================================


@pytest.fixture
def record_factory() -> type[RecordFactory]:
    """Provide the RecordFactory."""
    return RecordFactory


# ============================================================================
# PYTEST CONFIGURATION
# ============================================================================


def pytest_configure(config):
    """Configure pytest markers."""
    config.addinivalue_line("markers", "slow: mark test as slow")
    config.addinivalue_line("markers", "integration: mark as integration test")
    config.addinivalue_line("markers", "unit: mark as unit test")
