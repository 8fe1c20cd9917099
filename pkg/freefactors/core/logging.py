"""Structured logging for freefactors.

Standard-library logging configured through dictConfig, with an optional
JSON formatter. Every handler writes to stderr: stdout carries command
output only and must stay byte-identical between runs.
"""

import json
import logging
import logging.config
import sys
import traceback
from datetime import datetime
from typing import Any

from freefactors.core.config import settings

# Fields describing the computation a record belongs to
CONTEXT_FIELDS = (
    "rank",  # rank n of the ambient free group
    "mode",  # af | of
    "operation",  # fold, is_free_factor, potential_stick_search, ...
    "check",  # report or suite check name
    "seed",  # seed of a randomized run
    "duration_ms",
)

# Attributes every LogRecord carries; anything else came in through extra=
_RECORD_ATTRIBUTES = frozenset(
    logging.LogRecord("", 0, "", 0, "", (), None).__dict__
) | {"message", "asctime"}

_TEXT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class JSONFormatter(logging.Formatter):
    """One JSON object per record.

    Context fields are lifted to the top level; other extra= values are
    grouped under ``extra`` so suite logs can be filtered by check.
    """

    def format(self, record: logging.LogRecord) -> str:
        record.message = record.getMessage()
        payload: dict[str, Any] = {
            "timestamp": datetime.now().astimezone().isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.message,
            "source": {
                "file": record.pathname,
                "line": record.lineno,
                "function": record.funcName,
            },
        }
        for field in CONTEXT_FIELDS:
            value = getattr(record, field, None)
            if value is not None:
                payload[field] = value

        extra = {
            key: value
            for key, value in record.__dict__.items()
            if key not in _RECORD_ATTRIBUTES and key not in CONTEXT_FIELDS
        }
        if extra:
            payload["extra"] = extra
        if record.exc_info and record.exc_info[0] is not None:
            payload["exception"] = traceback.format_exception(*record.exc_info)
        # labels like ⟨ab, c⟩ stay readable
        return json.dumps(payload, default=str, ensure_ascii=False)


class ContextFilter(logging.Filter):
    """Give every record the context fields so the structured format never fails."""

    def filter(self, record: logging.LogRecord) -> bool:
        for field in CONTEXT_FIELDS:
            if not hasattr(record, field):
                setattr(record, field, None)
        return True


def get_logging_config() -> dict[str, Any]:
    """dictConfig for the current settings.

    ``text`` and ``structured`` differ only in whether rank, mode and
    operation are appended to each line.
    """
    log_format = settings.log_format.lower()
    level = settings.log_level.upper()
    formatters: dict[str, dict[str, Any]] = {
        "standard": {"format": _TEXT_FORMAT},
        "structured": {
            "format": _TEXT_FORMAT + " - rank=%(rank)s - mode=%(mode)s - operation=%(operation)s"
        },
    }
    if log_format == "json":
        formatters["json"] = {"()": JSONFormatter}
        formatter = "json"
    elif log_format == "structured":
        formatter = "structured"
    else:
        formatter = "standard"

    def stderr_handler(handler_level: str) -> dict[str, Any]:
        return {
            "class": "logging.StreamHandler",
            "level": handler_level,
            "formatter": formatter,
            "stream": sys.stderr,
            "filters": ["context"],
        }

    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": formatters,
        "filters": {"context": {"()": ContextFilter}},
        "handlers": {"console": stderr_handler(level), "error_console": stderr_handler("ERROR")},
        "loggers": {"freefactors": {"level": level, "handlers": ["console"], "propagate": False}},
        "root": {"level": "WARNING", "handlers": ["error_console"]},
    }


def setup_logging() -> None:
    """Apply the dictConfig built from the current settings; called once by the CLI."""
    logging.config.dictConfig(get_logging_config())


def get_logger(name: str = "freefactors") -> logging.Logger:
    """Get a logger under the package hierarchy.

    Args:
        name: Logger name, usually the calling module's __name__.

    Returns:
        The named logger.
    """
    return logging.getLogger(name)


def get_log_context(
    rank: int | None = None,
    mode: str | None = None,
    operation: str | None = None,
    check: str | None = None,
    seed: int | None = None,
    **extra: Any,
) -> dict[str, Any]:
    """Build the extra= mapping for a log call, dropping unset fields.

    Args:
        rank: Rank n of the ambient free group.
        mode: af or of.
        operation: Name of the operation being logged.
        check: Report or suite check name.
        seed: Seed of a randomized run.
        **extra: Further fields, grouped under ``extra`` by the JSON formatter.

    Returns:
        The mapping to pass as ``extra=``, without None values.

    Example:
        >>> logger.debug(
        ...     "whitehead step",
        ...     extra=get_log_context(rank=3, operation="whitehead_descent", size=12),
        ... )
    """
    context: dict[str, Any] = {
        "rank": rank,
        "mode": mode,
        "operation": operation,
        "check": check,
        "seed": seed,
        **extra,
    }
    return {k: v for k, v in context.items() if v is not None}
