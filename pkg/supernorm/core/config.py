"""
Application configuration using pydantic-settings.
"""
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Environment-driven settings. Nothing here changes a computed value."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Environment
    ENV: str = Field(default="local", description="Environment: local, ci")
    LOG_LEVEL: str = Field(default="WARNING", description="Logging level")
    LOG_FORMAT: str = Field(default="json", description="Log renderer: json or console")

    # Sieve
    SIEVE_CACHE_DIR: Optional[Path] = Field(
        default=None, description="Directory holding PTBLv001 sieve caches"
    )
    SIEVE_MEMORY_BUDGET_MB: int = Field(
        default=2048, description="Upper bound on sieve working memory"
    )
    SIEVE_SEGMENT_SIZE: int = Field(
        default=1 << 22, description="Odd numbers per sieve segment"
    )

    # Worker settings
    WORKER_CONCURRENCY: int = Field(default=1, description="Threads used by verify suites")


class Limits(BaseModel):
    """Caps, thresholds and default ranges. Changed only through explicit CLI flags."""

    model_config = ConfigDict(frozen=True)

    # Exact DP caps
    exact_size_nmax: int = 120
    exact_perimeter_nmax: int = 80
    # Float DP caps
    float_size_nmax: int = 100_000
    float_perimeter_nmax: int = 5_000
    # Brute-force oracle scope
    oracle_size_nmax: int = 30
    oracle_perimeter_nmax: int = 22

    # Sieve defaults
    default_sieve_limit: int = 1_000_000
    bounds_sieve_limit: int = 100_000_000

    # Validity thresholds of the explicit prime estimates
    nth_prime_threshold: int = 6
    log_prime_sum_threshold: int = 2
    mertens_threshold: int = 2_278_383

    # Default scan ranges for `bounds`
    nth_prime_scan_max: int = 1_000_000
    log_prime_sum_scan_max: int = 1_000_000
    mertens_scan_max: int = 10_000_000

    # Floating accumulation budget for bound margins
    rounding_budget: float = 1e-11

    # `verify` suite ranges
    verify_oracle_nmax: int = 20
    verify_chain_nmax: int = 70
    verify_float_perimeter_nmax: int = 2_000
    verify_closed_form_nmax: int = 10_000
    verify_exact_product_nmax: int = 200
    verify_bijection_bound: int = 10_000


# Global settings instance
settings = Settings()

# Global limits instance
limits = Limits()
