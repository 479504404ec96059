"""
Structured Logging - Run-correlated logging for long numerical runs

This module provides:
- RunContextFilter stamping every record with the current run_id
- RunFormatter (human-readable) and JSONFormatter (one object per line)
- configure_logging() for global setup from the CLI

Usage:
    from src.utils.structured_logging import configure_logging

    configure_logging(level=logging.INFO, format_type="json", run_id=run_id)
    logger.info("dimension done", extra={"dim": "3x3", "samples": 1000})
"""

import json
import logging
from logging import Filter, Formatter, LogRecord
from typing import Optional

# Attributes every LogRecord has; anything else came in through `extra`
_RESERVED_ATTRS = frozenset(
    (
        "msg", "args", "name", "levelname", "levelno", "pathname", "filename",
        "module", "lineno", "funcName", "created", "msecs", "relativeCreated",
        "thread", "threadName", "processName", "process", "exc_info", "exc_text",
        "stack_info", "message", "run_id", "taskName", "asctime",
    )
)

_current_run_id = "-"


def set_run_id(run_id: str) -> None:
    """Set the run id stamped on records from now on."""
    global _current_run_id
    _current_run_id = run_id


def get_run_id() -> str:
    return _current_run_id


class RunContextFilter(Filter):
    """
    Logging filter that attaches the run id to each record.

    Module state reaches worker processes only when they are forked; search
    work units carry the id so spawned workers set it before logging.
    """

    def filter(self, record: LogRecord) -> bool:
        if not hasattr(record, "run_id"):
            record.run_id = _current_run_id
        return True


class RunFormatter(Formatter):
    """Text formatter including the run id."""

    def __init__(self, fmt: Optional[str] = None, datefmt: Optional[str] = None):
        if fmt is None:
            fmt = "%(asctime)s - %(name)s - %(levelname)s - [%(run_id)s] - %(message)s"
        super().__init__(fmt, datefmt)

    def format(self, record: LogRecord) -> str:
        if not hasattr(record, "run_id"):
            record.run_id = _current_run_id
        return super().format(record)


class JSONFormatter(Formatter):
    """
    JSON log formatter.

    Outputs structured JSON logs suitable for log aggregation systems;
    extra fields passed to the logger become top-level keys.
    """

    def format(self, record: LogRecord) -> str:
        log_data = {
            "timestamp": self.formatTime(record),
            "level": record.levelname,
            "logger": record.name,
            "run_id": getattr(record, "run_id", _current_run_id),
            "message": record.getMessage(),
        }

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        for key, value in record.__dict__.items():
            if key not in _RESERVED_ATTRS and not key.startswith("_"):
                log_data[key] = value

        return json.dumps(log_data, default=str)


def configure_logging(
    level: int = logging.INFO,
    format_type: str = "text",  # 'text' or 'json'
    run_id: Optional[str] = None,
) -> None:
    """
    Configure logging globally.

    Args:
        level: Logging level
        format_type: 'text' for human-readable, 'json' for structured logs
        run_id: Identifier stamped on every record of this invocation
    """
    if run_id:
        set_run_id(run_id)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    # stderr keeps stdout free for command output
    console_handler = logging.StreamHandler()
    console_handler.setLevel(level)
    console_handler.addFilter(RunContextFilter())

    if format_type == "json":
        formatter: Formatter = JSONFormatter()
    else:
        formatter = RunFormatter()

    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger with the run context filter applied.

    Args:
        name: Logger name

    Returns:
        Logger with RunContextFilter applied
    """
    logger = logging.getLogger(name)
    if not any(isinstance(f, RunContextFilter) for f in logger.filters):
        logger.addFilter(RunContextFilter())
    return logger


__all__ = [
    "RunContextFilter",
    "RunFormatter",
    "JSONFormatter",
    "configure_logging",
    "get_logger",
    "set_run_id",
    "get_run_id",
]
