"""
Sentry Integration for Counterexample Alerting

Long desk-scale searches run unattended; when a DSN is configured every
counterexample candidate is reported as a Sentry event tagged with its
dimension pair and sample coordinates, in addition to the local dump.

Usage:
    from src.utils.monitoring import init_sentry, capture_counterexample

    init_sentry(dsn=settings.sentry_dsn, environment=settings.environment)
    ...
    capture_counterexample(record)
"""

import logging
import sys
from typing import Any, Dict, Optional

try:
    import sentry_sdk
    from sentry_sdk.integrations.logging import LoggingIntegration
    SENTRY_AVAILABLE = True
except ImportError:
    SENTRY_AVAILABLE = False


logger = logging.getLogger(__name__)

_initialized = False


def init_sentry(
    dsn: Optional[str] = None,
    environment: Optional[str] = None,
    release: Optional[str] = None,
) -> bool:
    """
    Initialize Sentry SDK

    Args:
        dsn: Sentry DSN (None disables alerting)
        environment: Environment name (production/ci/development)
        release: Release version

    Returns:
        bool: True if Sentry initialized successfully, False otherwise
    """
    global _initialized

    if not dsn:
        logger.debug("No Sentry DSN configured. Counterexample alerting disabled.")
        return False

    if not SENTRY_AVAILABLE:
        logger.warning("sentry-sdk not installed. Counterexample alerting disabled.")
        return False

    try:
        sentry_sdk.init(
            dsn=dsn,
            environment=environment or "development",
            release=release,
            integrations=[
                LoggingIntegration(level=logging.INFO, event_level=logging.ERROR),
            ],
            traces_sample_rate=0.0,
            send_default_pii=False,
            attach_stacktrace=False,
        )
        sentry_sdk.set_tag("application", "cqc-toolkit")
        sentry_sdk.set_tag("python_version", f"{sys.version_info.major}.{sys.version_info.minor}")
        _initialized = True
        logger.info(f"Sentry initialized - Environment: {environment}")
        return True

    except Exception as e:
        logger.error(f"Failed to initialize Sentry: {e}")
        return False


def is_enabled() -> bool:
    return SENTRY_AVAILABLE and _initialized


def capture_counterexample(record: Any, extra: Optional[Dict[str, Any]] = None) -> Optional[str]:
    """
    Report a counterexample candidate.

    Args:
        record: SampleRecord whose gap fell below the violation threshold
        extra: Additional context (dump path, master seed)

    Returns:
        Sentry event id, or None when alerting is disabled
    """
    if not is_enabled():
        return None

    with sentry_sdk.new_scope() as scope:
        scope.set_tag("dims", f"{record.dim_a}x{record.dim_b}")
        scope.set_tag("family", record.family)
        scope.set_context(
            "sample",
            {
                "index": record.index,
                "gap": record.gap,
                "qmi": record.qmi,
                "mi_sum": record.mi_sum,
                **(extra or {}),
            },
        )
        return sentry_sdk.capture_message(
            f"CQC counterexample candidate {record.dim_a}x{record.dim_b} #{record.index}",
            level="warning",
        )


def flush_events(timeout: float = 2.0) -> None:
    """Flush pending events before the process exits."""
    if is_enabled():
        sentry_sdk.flush(timeout=timeout)


__all__ = [
    "init_sentry",
    "is_enabled",
    "capture_counterexample",
    "flush_events",
]
