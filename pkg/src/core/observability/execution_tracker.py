"""
Execution Time Tracking Module

Times the stages of a CLI invocation or identity-suite run (suite execution,
table export) and reports them per run ID.

Architectural Decision: Context manager pattern for automatic timing
- A stage opened inside another stage on the same thread becomes its substage
- Suites fanned out over worker threads record one top-level stage per thread
- Failures are recorded and re-raised unchanged
- A run opened by run_scope is summarized in the log and dropped on exit

Author: System Architect
Date: 2026-02-11
"""

import statistics
import threading
import time
import uuid
from collections import defaultdict
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Any

from src.core.config.constants import Stage
from src.core.logging import clear_run_id, get_logger, get_run_id, log_stage, set_run_id

logger = get_logger(__name__)

_StackKey = tuple[str, int]


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="milliseconds").replace("+00:00", "Z")


@dataclass
class StageExecution:
    """
    One timed stage.

    ``success`` is derived: a stage failed iff it captured an error type.
    """

    stage_id: str
    stage_name: str
    run_id: str
    started_at: str
    ended_at: str | None = None
    duration_ms: float | None = None
    error_type: str | None = None
    error_message: str | None = None
    substages: list["StageExecution"] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def success(self) -> bool:
        return self.error_type is None

    def fail(self, exc: BaseException) -> None:
        self.error_type = type(exc).__name__
        self.error_message = str(exc)

    def to_dict(self) -> dict[str, Any]:
        data = {k: v for k, v in asdict(self).items() if k != "substages"}
        data["success"] = self.success
        data["substages"] = [s.to_dict() for s in self.substages]
        return data


class ExecutionTracker:
    """
    Records stage timings per run ID.

    Usage:
        tracker = ExecutionTracker()

        with tracker.track_stage(Stage.VERIFICATION, "all", run_id):
            with tracker.track_stage(Stage.VERIFICATION, "alternating", run_id):
                report = check_alternating_sum(3, (0, 4))

        tracker.get_execution_summary(run_id)["stages"][0]["substages"]
    """

    def __init__(self):
        self._finished: dict[str, list[StageExecution]] = defaultdict(list)
        self._open: dict[_StackKey, list[StageExecution]] = {}
        self._lock = threading.Lock()

    @contextmanager
    def track_stage(self, stage_id: Any, stage_name: str, run_id: str, **metadata):
        """
        Time the enclosed block as one stage.

        ``stage_id`` may be a Stage member or its string value; extra keyword
        arguments are stored as stage metadata.
        """
        execution = StageExecution(
            stage_id=str(getattr(stage_id, "value", stage_id)),
            stage_name=stage_name,
            run_id=run_id,
            started_at=_timestamp(),
            metadata=metadata,
        )
        key = (run_id, threading.get_ident())
        with self._lock:
            self._open.setdefault(key, []).append(execution)

        log_stage(logger, execution.stage_id, f"{stage_name} started", level="debug", **metadata)
        started = time.perf_counter()
        try:
            yield execution
        except Exception as exc:
            execution.fail(exc)
            raise
        finally:
            execution.duration_ms = round((time.perf_counter() - started) * 1000, 2)
            execution.ended_at = _timestamp()
            self._close(key, execution)
            log_stage(
                logger,
                execution.stage_id,
                f"{stage_name} finished",
                level="info" if execution.success else "error",
                duration_ms=execution.duration_ms,
                error_type=execution.error_type,
            )

    @contextmanager
    def run_scope(self, run_id: str | None = None):
        """
        Bind stage records to one run for the duration of the block.

        Inside an enclosing run the block joins it. Otherwise a run is opened
        under ``run_id`` (a fresh hex id when omitted); on exit its summary is
        logged and its records are dropped.
        """
        enclosing = get_run_id()
        if enclosing is not None:
            yield enclosing
            return

        run_id = run_id or uuid.uuid4().hex
        set_run_id(run_id)
        try:
            yield run_id
        finally:
            summary = self.get_execution_summary(run_id)
            log_stage(
                logger,
                Stage.CLEANUP,
                "Run finished",
                level="info" if summary["success"] else "warning",
                total_duration_ms=summary["total_duration_ms"],
                stage_count=summary["stage_count"],
                failed_stages=[s["stage_name"] for s in summary["failed_stages"]],
            )
            self.clear_run_data(run_id)
            clear_run_id()

    def _close(self, key: _StackKey, execution: StageExecution) -> None:
        with self._lock:
            stack = self._open[key]
            stack.pop()
            if stack:
                stack[-1].substages.append(execution)
                return
            del self._open[key]
            self._finished[execution.run_id].append(execution)

    def get_execution_summary(self, run_id: str) -> dict[str, Any]:
        """Top-level stages of a run with total time and any failures."""
        with self._lock:
            stages = list(self._finished.get(run_id, ()))

        failed = [
            {
                "stage_id": s.stage_id,
                "stage_name": s.stage_name,
                "error_type": s.error_type,
                "error_message": s.error_message,
            }
            for s in stages
            if not s.success
        ]
        return {
            "run_id": run_id,
            "total_duration_ms": round(sum(s.duration_ms or 0 for s in stages), 2),
            "stage_count": len(stages),
            "stages": [s.to_dict() for s in stages],
            "success": not failed,
            "failed_stages": failed,
        }

    def get_stage_statistics(self, stage_id: str) -> dict[str, Any]:
        """Duration statistics of one top-level stage across every recorded run."""
        with self._lock:
            durations = [
                s.duration_ms
                for stages in self._finished.values()
                for s in stages
                if s.stage_id == stage_id and s.duration_ms is not None
            ]

        stats: dict[str, Any] = {"stage_id": stage_id, "execution_count": len(durations)}
        if not durations:
            return stats | dict.fromkeys(
                ("avg_duration_ms", "p50_duration_ms", "min_duration_ms", "max_duration_ms"), 0
            )
        return stats | {
            "avg_duration_ms": round(statistics.fmean(durations), 2),
            "p50_duration_ms": round(statistics.median(durations), 2),
            "min_duration_ms": min(durations),
            "max_duration_ms": max(durations),
        }

    def clear_run_data(self, run_id: str) -> None:
        with self._lock:
            self._finished.pop(run_id, None)
            for key in [k for k in self._open if k[0] == run_id]:
                del self._open[key]


_tracker: ExecutionTracker | None = None


def get_tracker() -> ExecutionTracker:
    """Process-wide tracker."""
    global _tracker

    if _tracker is None:
        _tracker = ExecutionTracker()
    return _tracker
