"""
Configuration - Environment driven settings and logging setup

Settings are read from QBALANCE_* environment variables (a .env file is honoured).
"""

import logging
import sys
from functools import lru_cache

import structlog
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Runtime limits and logging options

    Attributes:
        max_alphabet: Largest accepted alphabet size q
        walk_guard: Largest number of Gray words enumerated in one call
        max_redundancy: Largest redundancy r accepted by the comparison tables
        log_level: structlog filtering level for the CLI
        log_json: Render log events as JSON instead of console lines
    """

    model_config = SettingsConfigDict(
        env_prefix="QBALANCE_",
        env_file=".env",
        extra="ignore",
    )

    max_alphabet: int = Field(default=256, ge=2)
    walk_guard: int = Field(default=2**20, ge=1)
    max_redundancy: int = Field(default=64, ge=2)
    log_level: str = "WARNING"
    log_json: bool = False


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Load settings once per process."""
    return Settings()


def configure_logging(level: str = "WARNING", json: bool = False) -> None:
    """
    Configure structlog to write filtered events to standard error

    Args:
        level: Minimum level name (DEBUG, INFO, WARNING, ...)
        json: Use the JSON renderer
    """
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        numeric = logging.WARNING

    renderer = (
        structlog.processors.JSONRenderer()
        if json
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
