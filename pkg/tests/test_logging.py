"""Tests for structured logging configuration."""

import json
import logging
import sys
from unittest.mock import patch

import pytest

from freefactors.core.logging import (
    CONTEXT_FIELDS,
    ContextFilter,
    JSONFormatter,
    get_log_context,
    get_logger,
    get_logging_config,
    setup_logging,
)


def make_record(msg: str = "folded", level: int = logging.INFO, exc_info=None):
    return logging.LogRecord(
        name="freefactors.graphs",
        level=level,
        pathname="folding.py",
        lineno=42,
        msg=msg,
        args=(),
        exc_info=exc_info,
    )


def formatted(record: logging.LogRecord) -> dict:
    return json.loads(JSONFormatter().format(record))


@pytest.fixture
def log_settings():
    with patch("freefactors.core.logging.settings") as mock_settings:
        mock_settings.log_format = "text"
        mock_settings.log_level = "WARNING"
        yield mock_settings


class TestJSONFormatter:
    """Test the one-object-per-line formatter."""

    def test_standard_fields(self):
        data = formatted(make_record())

        assert data["level"] == "INFO"
        assert data["logger"] == "freefactors.graphs"
        assert data["message"] == "folded"
        assert "timestamp" in data
        assert data["source"] == {"file": "folding.py", "line": 42, "function": None}

    def test_context_lifted_to_top_level(self):
        record = make_record("descent finished")
        record.rank = 3
        record.mode = "af"
        record.operation = "is_free_factor"
        record.duration_ms = 12.5

        data = formatted(record)

        assert (data["rank"], data["mode"], data["operation"]) == (3, "af", "is_free_factor")
        assert data["duration_ms"] == 12.5
        assert "extra" not in data

    def test_other_fields_grouped_under_extra(self):
        record = make_record("overlap classified")
        record.exceptions = 3
        record.verdict = "fake"

        assert formatted(record)["extra"] == {"exceptions": 3, "verdict": "fake"}

    def test_unset_context_omitted(self):
        record = make_record()
        ContextFilter().filter(record)

        data = formatted(record)

        assert not set(CONTEXT_FIELDS) & set(data)
        assert "extra" not in data

    def test_exception_traceback(self):
        try:
            raise ValueError("letter index 4 out of range")
        except ValueError:
            record = make_record("parse failed", logging.ERROR, sys.exc_info())

        text = "".join(formatted(record)["exception"])
        assert "ValueError" in text
        assert "letter index 4" in text

    def test_labels_not_escaped(self):
        label = "⟨ab, c⟩ ⊥ [accb]"
        assert formatted(make_record(label))["message"] == label


class TestContextFilter:
    """Test default context fields."""

    def test_adds_missing_fields(self):
        record = make_record()

        assert ContextFilter().filter(record) is True
        assert all(getattr(record, field) is None for field in CONTEXT_FIELDS)

    def test_keeps_existing_values(self):
        record = make_record()
        record.rank = 4
        record.check = "fold_order"

        ContextFilter().filter(record)

        assert (record.rank, record.check) == (4, "fold_order")


class TestGetLoggingConfig:
    """Test the dictConfig built from settings."""

    @pytest.mark.parametrize(
        ("log_format", "formatter"),
        [("text", "standard"), ("structured", "structured"), ("JSON", "json")],
    )
    def test_formatter_choice(self, log_settings, log_format, formatter):
        log_settings.log_format = log_format

        config = get_logging_config()

        assert config["handlers"]["console"]["formatter"] == formatter
        assert ("json" in config["formatters"]) == (formatter == "json")

    def test_level_applies_to_package_logger(self, log_settings):
        log_settings.log_level = "debug"

        config = get_logging_config()

        assert config["handlers"]["console"]["level"] == "DEBUG"
        assert config["loggers"]["freefactors"]["level"] == "DEBUG"
        assert config["handlers"]["error_console"]["level"] == "ERROR"

    def test_handlers_write_to_stderr(self, log_settings):
        config = get_logging_config()

        for handler in config["handlers"].values():
            assert handler["stream"] is sys.stderr
            assert handler["filters"] == ["context"]
        assert config["loggers"]["freefactors"]["propagate"] is False


class TestGetLogger:
    def test_default_name(self):
        assert get_logger().name == "freefactors"

    def test_module_name(self):
        assert get_logger("freefactors.graphs").name == "freefactors.graphs"


class TestGetLogContext:
    """Test the extra= helper."""

    def test_known_fields(self):
        context = get_log_context(rank=3, mode="of", operation="one_off_check")
        assert context == {"rank": 3, "mode": "of", "operation": "one_off_check"}

    def test_drops_none_but_keeps_zero(self):
        context = get_log_context(rank=3, mode=None, seed=0)
        assert context == {"rank": 3, "seed": 0}

    def test_custom_fields(self):
        context = get_log_context(check="fold_order", examined=40, truncated=False)
        assert context == {"check": "fold_order", "examined": 40, "truncated": False}


@pytest.fixture
def configured_logging():
    package = logging.getLogger("freefactors")
    saved = (package.level, package.propagate)
    yield
    for logger in (package, logging.getLogger()):
        for handler in list(logger.handlers):
            if handler.name in ("console", "error_console"):
                logger.removeHandler(handler)
    package.setLevel(saved[0])
    package.propagate = saved[1]


class TestIntegration:
    def test_json_records_go_to_stderr(self, log_settings, configured_logging, capsys):
        log_settings.log_format = "json"
        log_settings.log_level = "INFO"

        setup_logging()
        get_logger("freefactors.integration").info(
            "core computed",
            extra=get_log_context(rank=3, mode="af", operation="fold", edges=7),
        )
        captured = capsys.readouterr()

        assert captured.out == ""
        data = json.loads(captured.err.strip())
        assert data["logger"] == "freefactors.integration"
        assert data["message"] == "core computed"
        assert (data["rank"], data["operation"]) == (3, "fold")
        assert data["extra"] == {"edges": 7}
