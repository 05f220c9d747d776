"""Tests for utility decorators."""

import pytest
from pydantic import BaseModel, Field

from src.powergraph_spectra.core.exceptions import InvalidGroupSpecError
from src.powergraph_spectra.utils.decorators import timed, translate_validation_errors


class _Positive(BaseModel):
    value: int = Field(..., gt=0)


class TestTimedDecorator:
    """Test timed decorator functionality."""

    def test_timed_returns_result_unchanged(self):
        """@timed should not alter the return value."""

        @timed()
        def add(a, b):
            return a + b

        assert add(2, 3) == 5

    def test_timed_preserves_metadata(self):
        """@timed should keep the wrapped function's name and docstring."""

        @timed("Custom event")
        def documented():
            """Docstring."""
            return None

        assert documented.__name__ == "documented"
        assert documented.__doc__ == "Docstring."

    def test_timed_propagates_exceptions(self):
        """@timed should re-raise errors from the wrapped call."""

        @timed()
        def fails():
            raise ValueError("boom")

        with pytest.raises(ValueError, match="boom"):
            fails()


class TestTranslateValidationErrors:
    """Test translation of pydantic errors into domain errors."""

    def test_validation_error_becomes_domain_error(self):
        """ValidationError should surface as the configured domain exception."""

        @translate_validation_errors(InvalidGroupSpecError)
        def build(value):
            return _Positive(value=value)

        with pytest.raises(InvalidGroupSpecError, match="greater than 0"):
            build(-1)

    def test_success_passes_through(self):
        """Valid input should return normally."""

        @translate_validation_errors(InvalidGroupSpecError)
        def build(value):
            return _Positive(value=value)

        assert build(3).value == 3

    def test_other_exceptions_untouched(self):
        """Non-validation errors should not be translated."""

        @translate_validation_errors(InvalidGroupSpecError)
        def fails():
            raise KeyError("missing")

        with pytest.raises(KeyError):
            fails()
