"""
Unit Tests for Logging Module

Tests logger configuration, run context, processors and logging utilities.
"""

import logging
from unittest.mock import MagicMock

import pytest
import structlog

from src.core.config.constants import Stage
from src.core.logging.logger import (
    add_run_id,
    clear_run_id,
    get_logger,
    get_run_id,
    install_default_logging,
    log_stage,
    set_run_id,
    setup_logging,
    uppercase_level,
)


@pytest.mark.unit
class TestLoggerCreation:
    """Test logger creation and configuration."""

    def test_get_logger_returns_logger_instance(self):
        logger = get_logger(__name__)
        assert hasattr(logger, "info")

    def test_setup_logging_uses_configured_level(self):
        setup_logging(log_level="ERROR", log_format="json")
        assert logging.getLogger().level == logging.ERROR

    def test_setup_logging_writes_to_stderr_only(self):
        import sys

        setup_logging(log_level="INFO", log_format="console")
        streams = [
            h.stream for h in logging.getLogger().handlers if isinstance(h, logging.StreamHandler)
        ]
        assert sys.stdout not in streams

    def test_setup_logging_twice_does_not_duplicate_handlers(self):
        setup_logging()
        first = len(logging.getLogger().handlers)
        setup_logging()
        assert len(logging.getLogger().handlers) == first


@pytest.mark.unit
class TestRunContext:
    """Test run ID context management."""

    def test_set_and_get_run_id(self):
        set_run_id("run-123")
        try:
            assert get_run_id() == "run-123"
        finally:
            clear_run_id()

    def test_clear_run_id(self):
        set_run_id("run-456")
        clear_run_id()
        assert get_run_id() is None


@pytest.mark.unit
class TestProcessors:
    """Test structlog processors."""

    def test_add_run_id_injects_current_run(self):
        set_run_id("run-789")
        try:
            event = add_run_id(None, "info", {"event": "x"})
        finally:
            clear_run_id()
        assert event["run_id"] == "run-789"

    def test_add_run_id_skips_when_unset(self):
        clear_run_id()
        assert "run_id" not in add_run_id(None, "info", {"event": "x"})

    def test_add_run_id_keeps_explicit_value(self):
        set_run_id("run-ctx")
        try:
            event = add_run_id(None, "info", {"event": "x", "run_id": "explicit"})
        finally:
            clear_run_id()
        assert event["run_id"] == "explicit"

    def test_uppercase_level(self):
        event = uppercase_level(None, "info", {"event": "x", "level": "warning"})
        assert event["level"] == "WARNING"


@pytest.mark.unit
class TestLogStageFunction:
    """Test the log_stage utility function."""

    def test_log_stage_passes_enum_value(self):
        mock_logger = MagicMock()

        log_stage(mock_logger, Stage.CACHE_LOOKUP, "L1 cache hit", key="gbar|1|1|-|")

        mock_logger.info.assert_called_once_with(
            "L1 cache hit", stage="2.0_CACHE_LOOKUP", key="gbar|1|1|-|"
        )

    def test_log_stage_accepts_plain_string(self):
        mock_logger = MagicMock()

        log_stage(mock_logger, "CT_CHARACTER_TABLE", "Built")

        assert mock_logger.info.call_args[1]["stage"] == "CT_CHARACTER_TABLE"

    @pytest.mark.parametrize("level", ["debug", "info", "warning", "error", "critical"])
    def test_log_stage_with_different_levels(self, level):
        mock_logger = MagicMock()

        log_stage(mock_logger, Stage.VERIFICATION, "Suite finished", level=level)

        getattr(mock_logger, level).assert_called_once()


@pytest.mark.unit
class TestDefaultLogging:
    """Test the configuration library callers get without setup_logging."""

    @pytest.fixture
    def default_logging(self, caplog):
        structlog.reset_defaults()
        install_default_logging()
        caplog.set_level(logging.WARNING)
        yield caplog
        structlog.reset_defaults()
        install_default_logging()

    def test_debug_stage_lines_stay_off_stdout(self, default_logging, capsys):
        logger = get_logger("quiet")
        log_stage(logger, Stage.COEFFICIENT_EVALUATION, "Evaluating gbar", level="debug")
        log_stage(logger, Stage.COEFFICIENT_EVALUATION, "Coefficient ready")

        assert capsys.readouterr().out == ""
        assert "Evaluating gbar" not in default_logging.text
        assert "Coefficient ready" not in default_logging.text

    def test_warnings_still_reach_the_root_logger(self, default_logging, capsys):
        log_stage(get_logger("quiet"), Stage.CACHE_PERSISTENCE, "Skipped line", level="warning")

        assert capsys.readouterr().out == ""
        assert "Skipped line" in default_logging.text

    def test_import_leaves_structlog_configured(self):
        assert structlog.is_configured()
