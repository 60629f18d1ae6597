"""
Unit Tests for Configuration Constants

Tests the configuration constants and their validation.
"""

import pytest

from src.core.config.constants import (
    ACCEPTANCE_MAX_SIZE,
    ACCEPTANCE_N_MAX,
    CSV_HEADER,
    EMPTY_PARTITION_TOKEN,
    PART_SEPARATOR,
    SUITE_DEFAULT_MAX_SIZE,
    SUITE_DEFAULT_N_MAX,
    SUITE_DEFAULT_N_WINDOW,
    CoefficientKind,
    ExitCode,
    Stage,
)


@pytest.mark.unit
class TestStageEnum:
    """Test stage identifiers."""

    def test_stage_values_are_unique(self):
        values = [stage.value for stage in Stage]
        assert len(set(values)) == len(values)

    def test_lifecycle_stages_are_numbered_in_order(self):
        numbered = [s.value for s in Stage if s.value[0].isdigit()]
        prefixes = [float(v.split("_", 1)[0]) for v in numbered]
        assert prefixes == sorted(prefixes)

    def test_stage_is_a_string(self):
        assert Stage.VERIFICATION == "4.0_VERIFICATION"


@pytest.mark.unit
class TestCoefficientKind:
    """Test coefficient kind tokens used in cache keys."""

    def test_kind_tokens(self):
        assert [k.value for k in CoefficientKind] == ["g", "gbar", "lr", "mult"]

    def test_kind_parses_from_token(self):
        assert CoefficientKind("gbar") is CoefficientKind.REDUCED


@pytest.mark.unit
class TestExitCodes:
    """Test CLI exit codes."""

    def test_exit_code_values(self):
        assert ExitCode.SUCCESS == 0
        assert ExitCode.FAILURE == 1
        assert ExitCode.USAGE == 2


@pytest.mark.unit
class TestFormatConstants:
    """Test partition encoding and table constants."""

    def test_partition_tokens(self):
        assert EMPTY_PARTITION_TOKEN == "-"
        assert PART_SEPARATOR == ","

    def test_csv_header(self):
        assert ",".join(CSV_HEADER) == "lambda,mu,tau,value"


@pytest.mark.unit
class TestSuiteDefaults:
    """Test verification defaults stay within the acceptance caps."""

    def test_defaults_within_acceptance_caps(self):
        assert 0 < SUITE_DEFAULT_MAX_SIZE <= ACCEPTANCE_MAX_SIZE
        assert 0 < SUITE_DEFAULT_N_MAX <= ACCEPTANCE_N_MAX

    def test_default_window_is_ordered(self):
        lo, hi = SUITE_DEFAULT_N_WINDOW
        assert 0 <= lo <= hi
