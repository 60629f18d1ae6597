"""
Structured Logging

structlog over the stdlib root logger. Every record carries the ``stage`` it
was logged from and, inside a CLI invocation, the ``run_id`` of that
invocation. Handlers write to stderr (plus LOG_FILE when set): stdout is
reserved for the single JSON document each CLI invocation prints. Importing
the module installs a quiet WARNING-and-above default for library callers
that never call setup_logging.

Author: System Architect
Date: 2026-02-11
"""

import logging
import sys
from contextvars import ContextVar
from pathlib import Path
from typing import Any

import structlog
from structlog.types import EventDict, WrappedLogger

from src.core.config.settings import get_settings

_run_id: ContextVar[str | None] = ContextVar("run_id", default=None)


def add_run_id(logger: WrappedLogger, method_name: str, event_dict: EventDict) -> EventDict:
    """Processor: attach the current run ID, if any."""
    run_id = _run_id.get()
    if run_id:
        event_dict.setdefault("run_id", run_id)
    return event_dict


def uppercase_level(logger: WrappedLogger, method_name: str, event_dict: EventDict) -> EventDict:
    if "level" in event_dict:
        event_dict["level"] = event_dict["level"].upper()
    return event_dict


def _handlers(log_file: str | None) -> list[logging.Handler]:
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    return handlers


def setup_logging(log_level: str | None = None, log_format: str | None = None) -> None:
    """
    Configure structlog and the root logger.

    Safe to call repeatedly; existing root handlers are replaced.

    Args:
        log_level: DEBUG..CRITICAL, defaults to LOG_LEVEL
        log_format: 'json' or 'console', defaults to LOG_FORMAT
    """
    config = get_settings().logging
    level = (log_level or config.LOG_LEVEL).upper()
    fmt = log_format or config.LOG_FORMAT

    root = logging.getLogger()
    root.handlers.clear()
    root.setLevel(level)
    for handler in _handlers(config.LOG_FILE):
        handler.setFormatter(logging.Formatter("%(message)s"))
        root.addHandler(handler)

    renderer: Any = (
        structlog.processors.JSONRenderer()
        if fmt == "json"
        else structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())
    )
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            add_run_id,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.stdlib.add_log_level,
            uppercase_level,
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            renderer,
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def install_default_logging() -> None:
    """
    Quiet configuration used until setup_logging runs.

    Records go through the stdlib root logger, which drops anything below
    WARNING and writes the rest to stderr; stdout stays untouched.
    """
    structlog.configure(
        processors=[
            add_run_id,
            structlog.stdlib.add_log_level,
            uppercase_level,
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name)


def set_run_id(run_id: str) -> None:
    _run_id.set(run_id)


def get_run_id() -> str | None:
    return _run_id.get()


def clear_run_id() -> None:
    _run_id.set(None)


def log_stage(
    logger: structlog.stdlib.BoundLogger, stage: Any, message: str, level: str = "info", **kwargs
) -> None:
    """
    Log ``message`` tagged with a stage.

    ``stage`` is a Stage member or its string value.

    Usage:
        log_stage(logger, Stage.CACHE_LOOKUP, "Cache l1", key="gbar|1|1|-|")
    """
    getattr(logger, level.lower())(message, stage=str(getattr(stage, "value", stage)), **kwargs)


if not structlog.is_configured():
    install_default_logging()
