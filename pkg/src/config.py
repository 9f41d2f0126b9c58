"""Configuration management for the Fitting ideal toolkit."""

import os
from dataclasses import dataclass

from dotenv import load_dotenv

from .errors import ConfigError

load_dotenv()

# Largest number of t x t submatrices a single minor enumeration may visit
DEFAULT_MINOR_BUDGET = 200_000

# Search-tree nodes, Betti multidegrees and per-semigroup work
DEFAULT_BUDGET = 200_000

DEFAULT_MAX_GENUS = 12


def _int_from_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from e
    if value <= 0:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    """Application configuration."""

    minor_budget: int = DEFAULT_MINOR_BUDGET
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    max_genus: int = DEFAULT_MAX_GENUS
    workers: int = 1
    log_level: str = "INFO"

    @classmethod
    def from_env(cls) -> "Settings":
        """Load configuration from environment variables."""
        seed_raw = os.environ.get("FITT_SEED", "0")
        try:
            seed = int(seed_raw)
        except ValueError as e:
            raise ConfigError(f"FITT_SEED must be an integer, got {seed_raw!r}") from e
        return cls(
            minor_budget=_int_from_env("FITT_MAX_MINORS", DEFAULT_MINOR_BUDGET),
            budget=_int_from_env("FITT_BUDGET", DEFAULT_BUDGET),
            seed=seed,
            max_genus=_int_from_env("FITT_MAX_GENUS", DEFAULT_MAX_GENUS),
            workers=_int_from_env("FITT_WORKERS", 1),
            log_level=os.environ.get("FITT_LOG_LEVEL", "INFO").upper(),
        )


_settings: Settings | None = None


def get_settings() -> Settings:
    """Get or create the shared settings.

    Lazy-initialized on first call. Safe to call multiple times.
    """
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def set_settings(settings: Settings) -> None:
    """Install explicit settings (the CLI does this after parsing flags)."""
    global _settings
    _settings = settings


def reset_settings() -> None:
    global _settings
    _settings = None


def resolve_minor_budget(budget: int | None) -> int:
    return get_settings().minor_budget if budget is None else budget


def resolve_budget(budget: int | None) -> int:
    return get_settings().budget if budget is None else budget
