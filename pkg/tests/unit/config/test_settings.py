"""Tests for Settings configuration."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.powergraph_spectra.config.settings import Settings, get_settings


class TestSettingsConfiguration:
    """Test Settings configuration loading and validation."""

    def test_settings_defaults(self):
        """Settings should load with defaults when nothing is set."""
        settings = Settings()

        assert settings.threads == 1
        assert settings.log_level == "INFO"
        assert settings.full_charpoly_max_order >= 1

    def test_settings_loads_threads_from_tool_threads(self, monkeypatch):
        """TOOL_THREADS should populate threads."""
        monkeypatch.setenv("TOOL_THREADS", "4")

        assert Settings().threads == 4

    def test_settings_accepts_field_name(self):
        """Field names should work as well as aliases."""
        assert Settings(threads=3).threads == 3

    def test_settings_rejects_zero_threads(self):
        """Thread count must be positive."""
        with pytest.raises(ValidationError, match="TOOL_THREADS"):
            Settings(threads=0)

    def test_settings_normalizes_log_level(self, monkeypatch):
        """Log level should be uppercased."""
        monkeypatch.setenv("LOG_LEVEL", "debug")

        assert Settings().log_level == "DEBUG"

    def test_settings_rejects_unknown_log_level(self):
        """Unknown log levels should fail validation."""
        with pytest.raises(ValidationError):
            Settings(log_level="LOUD")

    def test_settings_rejects_sample_smaller_than_exhaustive_limit(self):
        """Cross-field constraint on axiom sampling."""
        with pytest.raises(ValidationError, match="axiom_sample_size"):
            Settings(axiom_sample_size=10, exhaustive_axiom_limit=100)

    def test_tolerance_property_is_exact(self):
        """Tolerance should be exposed as a Fraction."""
        settings = Settings(numeric_tolerance=1e-6)

        assert settings.tolerance == Fraction(1, 10**6)

    def test_settings_rejects_large_tolerance(self):
        """Tolerances of 1 or more are rejected."""
        with pytest.raises(ValidationError):
            Settings(numeric_tolerance=2.0)


class TestGetSettings:
    """Test the cached accessor."""

    def test_get_settings_is_cached(self):
        """Repeated calls return the same instance."""
        assert get_settings() is get_settings()

    def test_cache_clear_rereads_environment(self, monkeypatch):
        """Clearing the cache picks up new environment values."""
        get_settings()
        monkeypatch.setenv("TOOL_THREADS", "2")
        get_settings.cache_clear()

        assert get_settings().threads == 2
