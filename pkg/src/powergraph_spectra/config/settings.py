"""Settings configuration for the power graph spectra toolkit."""

from fractions import Fraction
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import AliasChoices, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.powergraph_spectra.config.constants import (
    DEFAULT_AXIOM_SAMPLE_SEED,
    DEFAULT_AXIOM_SAMPLE_SIZE,
    DEFAULT_EXHAUSTIVE_AXIOM_LIMIT,
    DEFAULT_FULL_CHARPOLY_MAX_ORDER,
    DEFAULT_MAX_BISECTION_STEPS,
)

# Load environment variables from .env file
load_dotenv()

VALID_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        populate_by_name=True,  # Allow both alias and field name
    )

    # Parallelism
    threads: int = Field(
        default=1,
        validation_alias=AliasChoices("tool_threads", "threads"),
        description="Worker cap for the integrality scan (TOOL_THREADS)",
    )

    # Exact linear algebra
    full_charpoly_max_order: int = Field(
        default=DEFAULT_FULL_CHARPOLY_MAX_ORDER,
        ge=1,
        description="Largest order for which the oracle runs Berkowitz on the whole matrix",
    )

    # Numeric root isolation
    numeric_tolerance: float = Field(
        default=1e-9, gt=0, description="Absolute width of certified root intervals"
    )
    max_bisection_steps: int = Field(
        default=DEFAULT_MAX_BISECTION_STEPS,
        ge=1,
        description="Bisection budget per root before giving up",
    )

    # Group axiom checks
    exhaustive_axiom_limit: int = Field(
        default=DEFAULT_EXHAUSTIVE_AXIOM_LIMIT,
        ge=1,
        description="Groups up to this order are checked for associativity on all triples",
    )
    axiom_sample_size: int = Field(
        default=DEFAULT_AXIOM_SAMPLE_SIZE, ge=1, description="Sampled triples for larger groups"
    )
    axiom_sample_seed: int = Field(default=DEFAULT_AXIOM_SAMPLE_SEED, description="Sampling seed")

    log_level: str = Field(default="INFO", description="Logging level")

    @field_validator("threads")
    @classmethod
    def validate_threads(cls, v: int) -> int:
        """Validate worker count."""
        if v < 1:
            raise ValueError("TOOL_THREADS must be at least 1")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate and normalize log level."""
        level = v.upper()
        if level not in VALID_LOG_LEVELS:
            raise ValueError(f"Log level must be one of {', '.join(VALID_LOG_LEVELS)}")
        return level

    @model_validator(mode="after")
    def validate_constraints(self) -> "Settings":
        """Validate cross-field constraints."""
        if self.axiom_sample_size < self.exhaustive_axiom_limit:
            raise ValueError("axiom_sample_size must not be smaller than exhaustive_axiom_limit")
        if self.numeric_tolerance >= 1:
            raise ValueError("numeric_tolerance must be below 1")
        return self

    @property
    def tolerance(self) -> Fraction:
        """Numeric tolerance as an exact rational."""
        return Fraction(str(self.numeric_tolerance))


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get the process-wide settings instance."""
    return Settings()
