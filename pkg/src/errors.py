"""
Error Handling - Domain exceptions with stable codes and exit statuses

This module provides:
- CqcError base class carrying a code, a user-facing message and log context
- One subclass per failure the numerical library can report
- ERROR_CODES / EXIT_CODES tables used by the command-line front end

Usage:
    from src.errors import DimensionMismatch

    raise DimensionMismatch(internal_message="basis dim 3 != subsystem dim 2")

Exceptions do not derive from ValueError, so when raised inside a pydantic
validator they propagate unchanged rather than as a ValidationError.
"""

import logging
import uuid
from datetime import datetime, timezone
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)


# Error codes mapped to messages safe to print on the console
ERROR_CODES: Dict[str, str] = {
    "E001": "Internal error.",
    "E002": "Dimension mismatch between operands.",
    "E003": "Matrix is not Hermitian within tolerance.",
    "E004": "Eigensolver did not converge (ill-conditioned input).",
    "E005": "Parameter out of range.",
    "E006": "Matrix is not a valid density matrix.",
    "E007": "Invalid probability distribution.",
    "E008": "Bases are not mutually unbiased.",
    "E009": "Invalid search configuration.",
    "E010": "Dimension pair must be square (N x N).",
    "E011": "Internal consistency check failed.",
    "E012": "Malformed state file.",
    "E013": "Output could not be written.",
}

# Process exit status for each code (sysexits.h conventions)
EX_USAGE = 64
EX_DATAERR = 65
EX_SOFTWARE = 70
EX_CANTCREAT = 73

EXIT_CODES: Dict[str, int] = {
    "E001": EX_SOFTWARE,
    "E002": EX_USAGE,
    "E003": EX_DATAERR,
    "E004": EX_DATAERR,
    "E005": EX_USAGE,
    "E006": EX_DATAERR,
    "E007": EX_DATAERR,
    "E008": EX_USAGE,
    "E009": EX_USAGE,
    "E010": EX_USAGE,
    "E011": EX_SOFTWARE,
    "E012": EX_USAGE,
    "E013": EX_CANTCREAT,
}


def generate_trace_id() -> str:
    """Generate a unique trace ID for log correlation."""
    return str(uuid.uuid4())


class CqcError(Exception):
    """
    Base exception for the toolkit.

    Attributes:
        code: Error code (E001-E013)
        message: Console-safe message (defaults from the code)
        exit_code: Process exit status the CLI should use
        trace_id: Unique ID for log correlation
        internal_message: Detailed message for logs
        context: Additional structured context for logs
    """

    code: str = "E001"

    def __init__(
        self,
        internal_message: Optional[str] = None,
        message: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        self.message = message or ERROR_CODES.get(self.code, ERROR_CODES["E001"])
        self.exit_code = EXIT_CODES.get(self.code, EX_SOFTWARE)
        self.trace_id = generate_trace_id()
        self.internal_message = internal_message
        self.context = context or {}
        self.timestamp = datetime.now(timezone.utc).isoformat()

        detail = f"{self.message} {internal_message}" if internal_message else self.message
        super().__init__(detail)

    def to_dict(self) -> Dict[str, Any]:
        """Serializable view for reports."""
        return {
            "error": {
                "code": self.code,
                "type": type(self).__name__,
                "message": self.message,
                "detail": self.internal_message,
                "trace_id": self.trace_id,
                "timestamp": self.timestamp,
            }
        }

    def log_error(self, logger_instance: Optional[logging.Logger] = None) -> None:
        """
        Log the error with full details.

        Args:
            logger_instance: Optional logger to use
        """
        log = logger_instance or logger
        log.error(
            f"{type(self).__name__} [{self.code}]: {self.internal_message or self.message}",
            extra={
                "error_code": self.code,
                "trace_id": self.trace_id,
                "exit_code": self.exit_code,
                "context": self.context,
            },
        )


class DimensionMismatch(CqcError):
    code = "E002"


class NotHermitian(CqcError):
    code = "E003"


class NoConvergence(CqcError):
    code = "E004"


class ParamOutOfRange(CqcError):
    code = "E005"


class NotAState(CqcError):
    code = "E006"


class InvalidDistribution(CqcError):
    code = "E007"


class MubViolation(CqcError):
    code = "E008"


class ConfigInvalid(CqcError):
    code = "E009"


class NonSquareDim(ConfigInvalid):
    code = "E010"


class InternalConsistencyError(CqcError):
    code = "E011"


class StateFileError(CqcError):
    code = "E012"


class OutputError(CqcError):
    code = "E013"


__all__ = [
    "ERROR_CODES",
    "EXIT_CODES",
    "EX_USAGE",
    "EX_DATAERR",
    "EX_SOFTWARE",
    "EX_CANTCREAT",
    "generate_trace_id",
    "CqcError",
    "DimensionMismatch",
    "NotHermitian",
    "NoConvergence",
    "ParamOutOfRange",
    "NotAState",
    "InvalidDistribution",
    "MubViolation",
    "ConfigInvalid",
    "NonSquareDim",
    "InternalConsistencyError",
    "StateFileError",
    "OutputError",
]
