"""
Application settings and configuration management.

Settings are pydantic-settings models grouped by concern. Every field can be
set from the environment (or a .env file) under the group's prefix, and the
CLI overrides individual fields from its flags.
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import find_dotenv, load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from ..core.exceptions import ConfigurationError


class ComputeSettings(BaseSettings):
    """Budgets and parallelism for computations."""

    model_config = SettingsConfigDict(env_prefix="COLLATZ_")

    step_budget: int = Field(
        default=10_000_000,
        ge=1,
        description="Maximum steps per trajectory before reporting a budget overrun",
    )

    level_cap: int = Field(
        default=5,
        ge=3,
        description="Highest seed level enumerated without an explicit override",
    )

    trend_cap: int = Field(
        default=7,
        ge=0,
        description="Highest k for corner-family trend tables",
    )

    threads: int = Field(
        default_factory=lambda: os.cpu_count() or 1,
        ge=1,
        description="Worker threads for sharded scans and seed enumeration",
    )

    shard_size: int = Field(
        default=50_000,
        ge=1,
        description="Width of one record-scan shard",
    )


class CacheSettings(BaseSettings):
    """File cache for long record scans."""

    model_config = SettingsConfigDict(env_prefix="COLLATZ_CACHE_")

    dir: Optional[Path] = Field(
        default=None,
        description="Directory for cached scan shards; caching is off when unset",
    )

    @field_validator("dir")
    @classmethod
    def validate_dir(cls, v: Optional[Path]) -> Optional[Path]:
        if v is not None and v.exists() and not v.is_dir():
            raise ValueError(f"Cache path is not a directory: {v}")
        return v


class VerifySettings(BaseSettings):
    """Scales used by the verification suites."""

    model_config = SettingsConfigDict(env_prefix="COLLATZ_VERIFY_")

    roundtrip_limit: int = Field(default=100_000, ge=3)
    random_reps: int = Field(default=1_000, ge=0)
    random_seed: int = Field(default=20_240_101)
    smooth_limit: int = Field(default=10_000, ge=1)
    smooth_max_k: int = Field(default=8, ge=0)
    cycle_k_max: int = Field(default=5, ge=0)
    cycle_cap: int = Field(default=30, ge=1)
    c2_limit: int = Field(default=100_000, ge=3)
    wirsching_limit: int = Field(default=10_000, ge=3)
    corner_k_max: int = Field(default=5, ge=1)
    gamma_k_max: int = Field(default=6, ge=1)
    prop6_k_max: int = Field(default=8, ge=0)
    prop6_b_max: int = Field(default=3, ge=0)
    mixing_b0_max: int = Field(default=2, ge=0)
    stats_limit: int = Field(default=10_000, ge=3)
    records_limit: int = Field(default=1_000_000, ge=3)
    res_records_limit: int = Field(default=100_000, ge=993)


class LoggingSettings(BaseSettings):
    """Logging configuration."""

    model_config = SettingsConfigDict(env_prefix="COLLATZ_LOG_")

    level: str = Field(default="INFO", description="Logging level")

    structured: bool = Field(
        default=False,
        description="Enable structured logging with JSON output",
    )

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {v}")
        return level


class Settings(BaseSettings):
    """Main application settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    compute: ComputeSettings = Field(default_factory=ComputeSettings)
    cache: CacheSettings = Field(default_factory=CacheSettings)
    verify: VerifySettings = Field(default_factory=VerifySettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)


def load_settings(env_file: Optional[Path] = None) -> Settings:
    """Load and validate application settings."""
    load_dotenv(dotenv_path=env_file or find_dotenv(usecwd=True))
    try:
        return Settings()
    except ValueError as e:
        raise ConfigurationError("Invalid collatzlab configuration", cause=e) from e
