"""Runtime settings with environment variable support.

Uses pydantic-settings; every field can be set through a ``RADO_``
prefixed environment variable or a .env file, and CLI flags override both.
"""

import logging
from pathlib import Path
from typing import Literal

from pydantic import AliasChoices, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]


class RadoSettings(BaseSettings):
    """Search budgets, parallelism, cache location and log level.

    Examples:
        >>> settings = RadoSettings()
        >>> settings.n_max
        256

        >>> settings = RadoSettings(workers=4, cache_path="results.jsonl")
    """

    model_config = SettingsConfigDict(
        env_prefix="RADO_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        case_sensitive=False,
        populate_by_name=True,
    )

    cache_path: Path | None = Field(
        default=None,
        description="JSONL result cache; no caching when unset",
        validation_alias=AliasChoices("RADO_CACHE", "cache_path"),
    )
    n_max: int = Field(default=256, ge=1, description="Default budget for compute and table")
    verify_n_max: int = Field(default=120, ge=1, description="Default budget for verify")
    node_limit: int | None = Field(default=None, ge=1, description="Search node cap")
    workers: int = Field(default=1, ge=1, description="Process pool size")
    split_depth: int = Field(
        default=12, ge=1, description="Prefix length at which the search tree is split"
    )
    log_level: LogLevel = Field(default="WARNING", description="Root log level")

    @field_validator("cache_path", mode="before")
    @classmethod
    def validate_path(cls, v):  # noqa: N805
        """Convert string paths to Path objects; empty means no cache."""
        if isinstance(v, str):
            return Path(v) if v.strip() else None
        return v

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v):  # noqa: N805
        """Accept lower-case level names."""
        return v.upper() if isinstance(v, str) else v

    @property
    def log_level_number(self) -> int:
        """Numeric logging level."""
        return logging.getLevelNamesMapping()[self.log_level]
