"""
Utility functions
"""
from .monitoring import capture_counterexample, flush_events, init_sentry
from .structured_logging import (
    JSONFormatter,
    RunContextFilter,
    RunFormatter,
    configure_logging,
    get_logger,
)

__all__ = [
    # Logging
    "RunContextFilter",
    "RunFormatter",
    "JSONFormatter",
    "configure_logging",
    "get_logger",
    # Monitoring
    "init_sentry",
    "capture_counterexample",
    "flush_events",
]
