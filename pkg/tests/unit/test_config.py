"""Unit tests for settings and log setup."""

import logging

import pytest
from pydantic import ValidationError
from rich.logging import RichHandler

from src.config import Settings, configure_logging, get_settings


@pytest.mark.unit
class TestSettings:
    """Test environment-driven settings."""

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("TDP_DUCKDB_PATH", raising=False)
        settings = Settings(_env_file=None)

        assert settings.duckdb_path == "./data/tdp.duckdb"
        assert settings.default_seed == 20240601
        assert settings.qchar_scan_bound == 64
        assert settings.nilpotency_limit == 256
        assert settings.max_workers == 1
        assert not settings.use_coefficient_cache

    def test_env_override(self, monkeypatch):
        """TDP_ variables override the defaults."""
        monkeypatch.setenv("TDP_DEFAULT_TRUNC", "12")
        monkeypatch.setenv("TDP_USE_COEFFICIENT_CACHE", "true")

        settings = get_settings()

        assert settings.default_trunc == 12
        assert settings.use_coefficient_cache

    def test_cached(self):
        assert get_settings() is get_settings()

    def test_bounds_validated(self, monkeypatch):
        monkeypatch.setenv("TDP_MAX_WORKERS", "0")

        with pytest.raises(ValidationError):
            Settings(_env_file=None)

    def test_duckdb_path_creates_parent(self, monkeypatch, tmp_path):
        monkeypatch.setenv("TDP_DUCKDB_PATH", str(tmp_path / "db" / "tdp.duckdb"))

        path = get_settings().duckdb_path_obj

        assert path.parent.is_dir()


@pytest.mark.unit
class TestLogging:
    """Test configure_logging."""

    def test_rich_handler_installed(self):
        configure_logging("debug")
        root = logging.getLogger()

        assert root.level == logging.DEBUG
        assert any(isinstance(h, RichHandler) for h in root.handlers)

    def test_level_from_settings(self, monkeypatch):
        monkeypatch.setenv("TDP_LOG_LEVEL", "warning")

        configure_logging()

        assert logging.getLogger().level == logging.WARNING
