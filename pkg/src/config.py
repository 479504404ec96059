"""
Application Configuration
"""
from pathlib import Path
from typing import Optional

from pydantic import field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables (prefix CQC_)"""

    # Environment Configuration
    environment: str = "development"  # development, ci, production

    # Logging
    log_level: str = "INFO"
    log_format: str = "text"  # text or json

    # Execution
    workers: int = 1
    chunk_size: int = 500  # samples per work unit; must not depend on workers
    master_seed: int = 20140101

    # Verdict thresholds (bits)
    violation_threshold: float = -1e-7
    pure_violation_threshold: float = -1e-9

    # Boundary perturbation defaults
    epsilon_low: float = 1e-3
    epsilon_high: float = 1.0
    lambda_grid: int = 101

    # Desk-scale sample counts (100x below the published runs)
    small_dim_samples: int = 100_000
    large_dim_samples: int = 10_000
    small_side_max: int = 3  # a pair is "small" when both local dimensions are at most this

    # Counterexample dumps and external alerting
    dump_dir: Optional[Path] = None
    sentry_dsn: Optional[str] = None

    model_config = SettingsConfigDict(
        env_prefix="CQC_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        v = v.strip().lower()
        if v not in ("text", "json"):
            raise ValueError(f"log_format must be 'text' or 'json', got {v!r}")
        return v

    @field_validator("workers", "chunk_size", "small_dim_samples", "large_dim_samples", "small_side_max")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be at least 1")
        return v

    @field_validator("lambda_grid")
    @classmethod
    def validate_lambda_grid(cls, v: int) -> int:
        if v < 2:
            raise ValueError("lambda_grid needs at least the two endpoints")
        return v

    @model_validator(mode="after")
    def validate_ranges(self) -> "Settings":
        """Validate numeric ranges and production requirements"""
        if not (0 < self.epsilon_low < self.epsilon_high):
            raise ValueError(
                f"epsilon range must satisfy 0 < low < high "
                f"(got {self.epsilon_low}, {self.epsilon_high})"
            )
        if self.violation_threshold > 0 or self.pure_violation_threshold > 0:
            raise ValueError("violation thresholds are negative gaps (bits)")

        if self.environment == "production" and self.dump_dir is None:
            raise ValueError(
                "CQC_DUMP_DIR is required in production so counterexample "
                "candidates are always written out for re-verification."
            )

        return self

    def samples_for(self, dim_a: int, dim_b: int) -> int:
        """Default sample count for a dimension pair."""
        if max(dim_a, dim_b) <= self.small_side_max:
            return self.small_dim_samples
        return self.large_dim_samples


# Global settings instance
settings = Settings()
