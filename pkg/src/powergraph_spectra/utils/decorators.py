"""Utility decorators for timing and error translation."""

import functools
import time
from collections.abc import Callable
from typing import Any, TypeVar

from pydantic import ValidationError

from src.powergraph_spectra.core.exceptions import PowerGraphSpectraError
from src.powergraph_spectra.utils.logger import get_logger

T = TypeVar("T")

logger = get_logger(__name__)


def timed(event: str | None = None):
    """Log the wall-clock runtime of each call at DEBUG level.

    The elapsed time is only logged, never returned, so payloads stay
    reproducible.

    Args:
        event: Log event name (default: "<function> finished")

    Returns:
        Decorated function

    Example:
        @timed("Oracle charpoly computed")
        def oracle_charpoly(spec, kind, proper):
            ...
    """

    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        name = event or f"{func.__name__} finished"

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> T:
            started = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                elapsed_ms = (time.perf_counter() - started) * 1000
                logger.debug(name, function=func.__qualname__, elapsed_ms=round(elapsed_ms, 3))

        return wrapper

    return decorator


def translate_validation_errors(error_cls: type[PowerGraphSpectraError]):
    """Re-raise pydantic validation errors as a domain exception.

    Args:
        error_cls: Domain exception raised in place of ValidationError

    Returns:
        Decorated function
    """

    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> T:
            try:
                return func(*args, **kwargs)
            except ValidationError as e:
                messages = "; ".join(err["msg"] for err in e.errors())
                raise error_cls(messages) from e

        return wrapper

    return decorator
