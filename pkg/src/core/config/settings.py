"""
Centralized Configuration Module using Pydantic Settings

This module provides type-safe, environment-based configuration for the
coefficient toolkit. All configuration is centralized here to ensure
consistency across the library, the cache and the CLI.

Architectural Decision: Pydantic Settings for type safety and validation
- Environment variable loading with .env support
- Type validation at startup (fail fast on misconfiguration)
- Easy testing with reload_settings()

Author: System Architect
Date: 2026-02-11
"""

from typing import Literal

from pydantic import Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.core.exceptions.base import ConfigurationError

# Absolute ceiling for the character oracle; KRON_MAX_N may only lower it.
ORACLE_HARD_CAP = 40


class CacheSettings(BaseSettings):
    """
    Coefficient cache configuration.

    STAGE-2: Cache tiers

    The L1 tier is an in-process LRU; the L2 tier is an optional JSON-lines file.
    """

    KRON_CACHE: str | None = Field(default=None, description="Default JSON-lines cache path")
    KRON_L1_CACHE_SIZE: int = Field(default=4096, description="L1 in-memory cache max entries")

    model_config = SettingsConfigDict(env_prefix="", case_sensitive=True)


class OracleSettings(BaseSettings):
    """
    Character oracle configuration.

    STAGE-CT: Character table limits
    """

    KRON_MAX_N: int = Field(
        default=ORACLE_HARD_CAP, description="Largest n for which S_n character tables are built"
    )

    model_config = SettingsConfigDict(env_prefix="", case_sensitive=True)


class VerificationSettings(BaseSettings):
    """
    Verification-build configuration.

    STAGE-4: Cross-checks and suite fan-out

    With KRON_VERIFY set, the tableau Littlewood-Richardson count is compared
    with the character method, the trivial-class criterion is compared with
    locate_in_class, and every alternating-sum truncation is re-checked.
    """

    KRON_VERIFY: bool = Field(default=False, description="Enable verification-build checks")
    KRON_VERIFY_TRUNCATION_MAX_N: int = Field(
        default=16, description="Largest parameter at which truncated terms are recomputed"
    )
    KRON_WORKERS: int = Field(default=1, description="Worker threads for suite/table fan-out")

    model_config = SettingsConfigDict(env_prefix="", case_sensitive=True)


class LoggingSettings(BaseSettings):
    """
    Logging configuration for structured logging.

    STAGE-L: Logging configuration

    Architectural Decision: structlog on top of stdlib logging, written to stderr
    so that CLI stdout carries exactly one JSON document.
    """

    LOG_LEVEL: str = Field(default="WARNING", description="Logging level")
    LOG_FORMAT: Literal["json", "console"] = Field(
        default="console", description="Log output format"
    )
    LOG_FILE: str | None = Field(default=None, description="Log file path (optional)")

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v):
        """Validate log level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"LOG_LEVEL must be one of {valid_levels}")
        return v.upper()

    model_config = SettingsConfigDict(env_prefix="", case_sensitive=True)


class Settings(BaseSettings):
    """
    Main settings class that aggregates all configuration sections.

    STAGE-0: Centralized configuration initialization

    Usage:
        from src.core.config.settings import get_settings

        settings = get_settings()
        cache_path = settings.cache.KRON_CACHE
        verify = settings.verification.KRON_VERIFY
    """

    # =========================================================================
    # APPLICATION
    # =========================================================================
    APP_NAME: str = Field(default="kronecker-deligne", description="Application name")
    APP_VERSION: str = Field(default="0.1.0", description="Application version")

    # =========================================================================
    # CACHE
    # =========================================================================
    KRON_CACHE: str | None = Field(default=None, description="Default JSON-lines cache path")
    KRON_L1_CACHE_SIZE: int = Field(
        default=4096, gt=0, description="L1 in-memory cache max entries"
    )

    # =========================================================================
    # CHARACTER ORACLE
    # =========================================================================
    KRON_MAX_N: int = Field(
        default=ORACLE_HARD_CAP,
        ge=1,
        le=ORACLE_HARD_CAP,
        description="Largest n for which S_n character tables are built",
    )

    # =========================================================================
    # VERIFICATION
    # =========================================================================
    KRON_VERIFY: bool = Field(default=False, description="Enable verification-build checks")
    KRON_VERIFY_TRUNCATION_MAX_N: int = Field(
        default=16, ge=0, description="Largest parameter at which truncated terms are recomputed"
    )
    KRON_WORKERS: int = Field(default=1, ge=1, description="Worker threads for suite/table fan-out")

    # =========================================================================
    # LOGGING
    # =========================================================================
    LOG_LEVEL: str = Field(default="WARNING", description="Logging level")
    LOG_FORMAT: Literal["json", "console"] = Field(
        default="console", description="Log output format"
    )
    LOG_FILE: str | None = Field(default=None, description="Log file path (optional)")

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v):
        """Validate log level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"LOG_LEVEL must be one of {valid_levels}")
        return v.upper()

    @field_validator("KRON_CACHE")
    @classmethod
    def empty_cache_path_is_none(cls, v):
        """Treat KRON_CACHE="" as unset."""
        return v or None

    # Nested configuration views
    @property
    def cache(self) -> "CacheSettings":
        """Get cache settings."""
        return CacheSettings(
            KRON_CACHE=self.KRON_CACHE,
            KRON_L1_CACHE_SIZE=self.KRON_L1_CACHE_SIZE,
        )

    @property
    def oracle(self) -> "OracleSettings":
        """Get character oracle settings."""
        return OracleSettings(KRON_MAX_N=self.KRON_MAX_N)

    @property
    def verification(self) -> "VerificationSettings":
        """Get verification settings."""
        return VerificationSettings(
            KRON_VERIFY=self.KRON_VERIFY,
            KRON_VERIFY_TRUNCATION_MAX_N=self.KRON_VERIFY_TRUNCATION_MAX_N,
            KRON_WORKERS=self.KRON_WORKERS,
        )

    @property
    def logging(self) -> "LoggingSettings":
        """Get logging settings."""
        return LoggingSettings(
            LOG_LEVEL=self.LOG_LEVEL, LOG_FORMAT=self.LOG_FORMAT, LOG_FILE=self.LOG_FILE
        )

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",  # Ignore extra environment variables
    )


# Global settings instance (singleton pattern)
_settings: Settings | None = None


def _load() -> Settings:
    try:
        return Settings()
    except ValidationError as exc:
        raise ConfigurationError.from_exception(
            exc,
            message="Invalid configuration",
            operation="get_settings",
            fields=sorted(".".join(map(str, e["loc"])) for e in exc.errors()),
        ) from exc


def get_settings() -> Settings:
    """
    Get the global settings instance (singleton).

    STAGE-0.3: Settings initialization

    Returns:
        Settings: Global settings instance
    """
    global _settings

    if _settings is None:
        _settings = _load()

    return _settings


def reload_settings() -> Settings:
    """
    Reload settings (useful for testing).

    Returns:
        Settings: New settings instance
    """
    global _settings
    _settings = _load()
    return _settings
