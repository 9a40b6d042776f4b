"""
Pytest configuration and fixtures for collatzlab tests.
"""

import os
from pathlib import Path

import pytest
from click.testing import CliRunner

from collatzlab.config.settings import (
    CacheSettings,
    ComputeSettings,
    LoggingSettings,
    Settings,
    VerifySettings,
)

SMALL_VERIFY_ENV = {
    "COLLATZ_VERIFY_ROUNDTRIP_LIMIT": "2001",
    "COLLATZ_VERIFY_RANDOM_REPS": "50",
    "COLLATZ_VERIFY_SMOOTH_LIMIT": "500",
    "COLLATZ_VERIFY_SMOOTH_MAX_K": "5",
    "COLLATZ_VERIFY_CYCLE_K_MAX": "3",
    "COLLATZ_VERIFY_CYCLE_CAP": "16",
    "COLLATZ_VERIFY_C2_LIMIT": "5001",
    "COLLATZ_VERIFY_WIRSCHING_LIMIT": "501",
    "COLLATZ_VERIFY_CORNER_K_MAX": "3",
    "COLLATZ_VERIFY_GAMMA_K_MAX": "4",
    "COLLATZ_VERIFY_PROP6_K_MAX": "4",
    "COLLATZ_VERIFY_PROP6_B_MAX": "2",
    "COLLATZ_VERIFY_MIXING_B0_MAX": "1",
    "COLLATZ_VERIFY_STATS_LIMIT": "500",
    "COLLATZ_VERIFY_RECORDS_LIMIT": "2000",
    "COLLATZ_VERIFY_RES_RECORDS_LIMIT": "2000",
}


@pytest.fixture
def compute_settings() -> ComputeSettings:
    """Compute settings sized for tests."""
    return ComputeSettings(
        step_budget=1_000_000, level_cap=4, trend_cap=7, threads=2, shard_size=100
    )


@pytest.fixture
def verify_settings() -> VerifySettings:
    """Verification scales small enough for unit tests."""
    return VerifySettings(
        roundtrip_limit=2001,
        random_reps=50,
        smooth_limit=500,
        smooth_max_k=5,
        cycle_k_max=3,
        cycle_cap=16,
        c2_limit=5001,
        wirsching_limit=501,
        corner_k_max=3,
        gamma_k_max=4,
        prop6_k_max=4,
        prop6_b_max=2,
        mixing_b0_max=1,
        stats_limit=500,
        records_limit=2000,
        res_records_limit=2000,
    )


@pytest.fixture
def test_settings(
    compute_settings: ComputeSettings, verify_settings: VerifySettings
) -> Settings:
    """Aggregated settings without cache."""
    return Settings(
        compute=compute_settings,
        cache=CacheSettings(),
        verify=verify_settings,
        logging=LoggingSettings(level="WARNING"),
    )


@pytest.fixture
def clean_env(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> Path:
    """Run from an empty directory with no COLLATZ_ variables set."""
    for name in list(os.environ):
        if name.startswith("COLLATZ_"):
            monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def small_env(monkeypatch: pytest.MonkeyPatch, clean_env: Path) -> Path:
    """Environment with test-sized verification scales for the CLI."""
    for name, value in SMALL_VERIFY_ENV.items():
        monkeypatch.setenv(name, value)
    monkeypatch.setenv("COLLATZ_LEVEL_CAP", "4")
    monkeypatch.setenv("COLLATZ_LOG_LEVEL", "WARNING")
    return clean_env


@pytest.fixture
def runner() -> CliRunner:
    """Click test runner."""
    return CliRunner()
