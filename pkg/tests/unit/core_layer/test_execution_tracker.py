"""
Unit Tests for ExecutionTracker

Tests stage timing, nesting, failure capture and per-run summaries.
"""

import threading

import pytest

from src.core.config.constants import Stage
from src.core.logging import get_run_id
from src.core.observability.execution_tracker import ExecutionTracker, get_tracker


@pytest.mark.unit
class TestExecutionTrackerStageTracking:
    """Test suite for execution stage tracking functionality."""

    def test_track_stage_creates_execution_record(self, execution_tracker):
        with execution_tracker.track_stage(Stage.VERIFICATION.value, "alternating", "run-1"):
            pass

        summary = execution_tracker.get_execution_summary("run-1")

        assert summary["stage_count"] == 1
        assert summary["success"] is True
        stage = summary["stages"][0]
        assert stage["stage_id"] == "4.0_VERIFICATION"
        assert stage["stage_name"] == "alternating"
        assert stage["duration_ms"] >= 0
        assert stage["ended_at"] is not None

    def test_enum_stage_ids_are_normalized(self, execution_tracker):
        with execution_tracker.track_stage(Stage.TABLE_EXPORT, "table", "run-enum"):
            pass

        stage = execution_tracker.get_execution_summary("run-enum")["stages"][0]
        assert stage["stage_id"] == "5.0_TABLE_EXPORT"

    def test_metadata_is_recorded(self, execution_tracker):
        with execution_tracker.track_stage("5.0", "table", "run-meta", max_size=2):
            pass

        stage = execution_tracker.get_execution_summary("run-meta")["stages"][0]
        assert stage["metadata"] == {"max_size": 2}

    def test_nested_stages_become_substages(self, execution_tracker):
        with execution_tracker.track_stage("4.0", "all", "run-nest"):
            with execution_tracker.track_stage("4.1", "alternating", "run-nest"):
                pass
            with execution_tracker.track_stage("4.2", "sandwich", "run-nest"):
                pass

        summary = execution_tracker.get_execution_summary("run-nest")

        assert summary["stage_count"] == 1
        names = [s["stage_name"] for s in summary["stages"][0]["substages"]]
        assert names == ["alternating", "sandwich"]

    def test_failed_stage_is_recorded_and_reraised(self, execution_tracker):
        with pytest.raises(RuntimeError, match="boom"):
            with execution_tracker.track_stage("3.0", "evaluate", "run-fail"):
                raise RuntimeError("boom")

        summary = execution_tracker.get_execution_summary("run-fail")

        assert summary["success"] is False
        assert summary["failed_stages"][0]["error_type"] == "RuntimeError"
        assert summary["failed_stages"][0]["error_message"] == "boom"

    def test_unknown_run_has_empty_summary(self, execution_tracker):
        summary = execution_tracker.get_execution_summary("missing")

        assert summary["stage_count"] == 0
        assert summary["total_duration_ms"] == 0
        assert summary["success"] is True


@pytest.mark.unit
class TestExecutionTrackerThreads:
    """Worker threads sharing a run ID keep separate nesting."""

    def test_parallel_stages_are_all_top_level(self, execution_tracker):
        barrier = threading.Barrier(4)

        def work(i: int) -> None:
            with execution_tracker.track_stage("4.0", f"case-{i}", "run-par"):
                barrier.wait(timeout=5)

        threads = [threading.Thread(target=work, args=(i,)) for i in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()

        summary = execution_tracker.get_execution_summary("run-par")

        assert summary["stage_count"] == 4
        assert all(not s["substages"] for s in summary["stages"])


@pytest.mark.unit
class TestExecutionTrackerStatistics:
    """Test per-stage statistics and cleanup."""

    def test_stage_statistics_aggregate_runs(self, execution_tracker):
        for run in ("a", "b", "c"):
            with execution_tracker.track_stage("5.0", "table", run):
                pass

        stats = execution_tracker.get_stage_statistics("5.0")

        assert stats["execution_count"] == 3
        assert stats["min_duration_ms"] <= stats["p50_duration_ms"] <= stats["max_duration_ms"]

    def test_stage_statistics_for_unknown_stage(self, execution_tracker):
        assert execution_tracker.get_stage_statistics("9.9")["execution_count"] == 0

    def test_clear_run_data(self, execution_tracker):
        with execution_tracker.track_stage("1.0", "parse", "run-clear"):
            pass

        execution_tracker.clear_run_data("run-clear")

        assert execution_tracker.get_execution_summary("run-clear")["stage_count"] == 0

    def test_get_tracker_is_singleton(self):
        assert get_tracker() is get_tracker()
        assert isinstance(get_tracker(), ExecutionTracker)


@pytest.mark.unit
class TestExecutionTrackerRunScope:
    """Test run scoping: records live only as long as their run."""

    def test_run_scope_sets_and_clears_run_id(self, execution_tracker):
        with execution_tracker.run_scope("run-scope") as run_id:
            assert run_id == "run-scope"
            assert get_run_id() == "run-scope"

        assert get_run_id() is None

    def test_run_scope_generates_an_id(self, execution_tracker):
        with execution_tracker.run_scope() as run_id:
            assert run_id
            assert get_run_id() == run_id

    def test_run_scope_drops_records_on_exit(self, execution_tracker):
        with execution_tracker.run_scope("run-drop") as run_id:
            with execution_tracker.track_stage(Stage.TABLE_EXPORT, "table", run_id):
                pass
            assert execution_tracker.get_execution_summary(run_id)["stage_count"] == 1

        assert execution_tracker.get_execution_summary("run-drop")["stage_count"] == 0
        assert execution_tracker.get_stage_statistics(Stage.TABLE_EXPORT.value)[
            "execution_count"
        ] == 0

    def test_nested_scope_joins_enclosing_run(self, execution_tracker):
        with execution_tracker.run_scope("outer"):
            with execution_tracker.run_scope("inner") as run_id:
                assert run_id == "outer"
                with execution_tracker.track_stage("4.0", "suite", run_id):
                    pass
            assert get_run_id() == "outer"
            assert execution_tracker.get_execution_summary("outer")["stage_count"] == 1

        assert execution_tracker.get_execution_summary("outer")["stage_count"] == 0

    def test_failed_stage_inside_scope_still_clears(self, execution_tracker):
        with pytest.raises(RuntimeError):
            with execution_tracker.run_scope("run-err") as run_id:
                with execution_tracker.track_stage("3.0", "evaluate", run_id):
                    raise RuntimeError("boom")

        assert get_run_id() is None
        assert execution_tracker.get_execution_summary("run-err")["stage_count"] == 0

    def test_library_suites_do_not_retain_stages(self, monkeypatch, execution_tracker):
        from src.kronecker.services import identities

        monkeypatch.setattr(identities, "get_tracker", lambda: execution_tracker)
        for _ in range(3):
            identities.check_alternating_sum(0, (0, 0))

        stats = execution_tracker.get_stage_statistics(Stage.VERIFICATION.value)
        assert stats["execution_count"] == 0
