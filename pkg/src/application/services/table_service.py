"""
Table Service

Batch generation of the reduced Kronecker coefficient table.

Rows cover every triple with |mu|, |tau| <= max_size and |lam| <= |mu| + |tau|,
ordered by mu, then tau, then lam (size first, reverse-lexicographic within a
size). Zero coefficients are omitted. Values already in the cache are reused
and fresh ones are written back in a single batch, so a second run against
the same cache file computes nothing and writes the same bytes.

Author: System Architect
Date: 2026-02-12
"""

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from src.core.config.constants import CSV_HEADER, CoefficientKind, Stage
from src.core.config.settings import get_settings
from src.core.exceptions import BoundViolationError, CacheIOError
from src.core.logging import get_logger, log_stage
from src.core.observability import get_tracker
from src.infrastructure.cache import CoefficientCache, make_key
from src.kronecker.models.partition import Partition
from src.kronecker.services.characters import partitions_up_to
from src.kronecker.services.coefficients import reduced_kronecker

logger = get_logger(__name__)

Triple = tuple[Partition, Partition, Partition]


class TableService:
    """
    Writes reduced-coefficient tables as CSV.

    Usage:
        service = TableService(CoefficientCache.from_settings())
        summary = service.write_table(max_size=2, out="gbar.csv")
    """

    def __init__(self, cache: CoefficientCache | None = None, workers: int | None = None):
        self._cache = cache or CoefficientCache()
        self._workers = workers or get_settings().KRON_WORKERS

    @staticmethod
    def triples(max_size: int) -> list[Triple]:
        """Table keys in row order: (lam, mu, tau)."""
        pool = partitions_up_to(max_size)
        rows: list[Triple] = []
        for mu in pool:
            for tau in pool:
                for lam in partitions_up_to(mu.size + tau.size):
                    rows.append((lam, mu, tau))
        return rows

    def _values(self, triples: list[Triple]) -> list[int]:
        keys = [make_key(CoefficientKind.REDUCED, *t) for t in triples]
        values: list[int | None] = [self._cache.get(key) for key in keys]
        missing = [i for i, v in enumerate(values) if v is None]

        def compute(i: int) -> int:
            return reduced_kronecker(*triples[i])

        if self._workers > 1 and len(missing) > 1:
            with ThreadPoolExecutor(max_workers=self._workers) as pool:
                fresh = list(pool.map(compute, missing))
        else:
            fresh = [compute(i) for i in missing]

        for i, value in zip(missing, fresh):
            values[i] = value
        self._cache.put_many((keys[i], values[i]) for i in missing)

        log_stage(
            logger,
            Stage.TABLE_EXPORT,
            "Table values ready",
            rows=len(triples),
            computed=len(missing),
            cached=len(triples) - len(missing),
        )
        return values

    def render(self, max_size: int) -> tuple[str, int]:
        """CSV text and the number of data rows."""
        if max_size < 0:
            raise BoundViolationError(
                "max_size must be non-negative", operation="table", details={"max_size": max_size}
            )
        triples = self.triples(max_size)
        values = self._values(triples)

        buffer = io.StringIO()
        writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        rows = 0
        for (lam, mu, tau), value in zip(triples, values):
            if value:
                writer.writerow((lam.encode(), mu.encode(), tau.encode(), str(value)))
                rows += 1
        return buffer.getvalue(), rows

    def write_table(self, max_size: int, out: str | os.PathLike) -> dict:
        """Render the table for max_size and write it to out."""
        path = Path(out)
        tracker = get_tracker()
        with (
            tracker.run_scope() as run_id,
            tracker.track_stage(
                Stage.TABLE_EXPORT.value, "table", run_id, max_size=max_size, out=str(path)
            ),
        ):
            text, rows = self.render(max_size)
            try:
                path.write_text(text, encoding="utf-8", newline="")
            except OSError as exc:
                raise CacheIOError.from_exception(
                    exc, message=f"Cannot write table to {path}", operation="table", path=str(path)
                ) from exc

        return {"out": str(path), "rows": rows, "max_size": max_size, "cache": self._cache.stats()}
