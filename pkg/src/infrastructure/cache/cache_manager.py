"""
Multi-Tier Coefficient Cache

Architecture:
    CoefficientCache (Public API)
        ├── CacheStrategy (L1→L2 coordination logic)
        │   ├── L1Storage (In-memory LRU)
        │   └── JsonLinesStorage (persistent JSON-lines file, optional)
        └── CacheObserver (hit/miss counters & logging)

File format: one JSON object per line,
    {"kind": "gbar", "lam": "2,1", "mu": "1", "tau": "1", "n": null, "value": "1"}
Duplicate keys resolve to the first occurrence; malformed lines are skipped
with a warning. Writes replace the file atomically (write temp, then rename).
One writer per file is assumed; readers are unrestricted.

Author: System Architect
Date: 2026-02-11
"""

import os
import re
import tempfile
import threading
from collections import OrderedDict
from collections.abc import Callable, Iterable
from pathlib import Path
from typing import Any, Literal

import orjson

from src.core.config.constants import CoefficientKind, Stage
from src.core.config.settings import get_settings
from src.core.exceptions import CacheIOError, CorruptEntryError
from src.core.interfaces import CoefficientStore
from src.core.logging.logger import get_logger, log_stage
from src.kronecker.models.partition import Partition
from src.kronecker.models.records import CoefficientRecord
from src.kronecker.services.partitions import parse_partition

logger = get_logger(__name__)

CacheSource = Literal["l1", "l2", "miss"]

_DECIMAL = re.compile(r"[0-9]+")


# =============================================================================
# KEYS AND ENTRIES
# =============================================================================


def make_key(
    kind: CoefficientKind | str,
    lam: Partition,
    mu: Partition,
    tau: Partition,
    n: int | None = None,
) -> str:
    """
    Canonical cache key ``kind|lam|mu|tau|n`` (n empty when absent).

    Example:
        >>> make_key(CoefficientKind.REDUCED, Partition((1,)), Partition((1,)), Partition())
        'gbar|1|1|-|'
    """
    kind_value = kind.value if isinstance(kind, CoefficientKind) else kind
    n_text = "" if n is None else str(n)
    return "|".join((kind_value, lam.encode(), mu.encode(), tau.encode(), n_text))


def encode_entry(key: str, value: str) -> bytes:
    kind, lam, mu, tau, n_text = key.split("|")
    return orjson.dumps(
        {
            "kind": kind,
            "lam": lam,
            "mu": mu,
            "tau": tau,
            "n": int(n_text) if n_text else None,
            "value": value,
        }
    )


def decode_entry(line: bytes) -> tuple[str, str]:
    """
    Parse one cache line into (key, value).

    Raises:
        CorruptEntryError: the line is not a well-formed entry
    """
    try:
        record = orjson.loads(line)
        kind = CoefficientKind(record["kind"])
        lam, mu, tau = (parse_partition(record[f]) for f in ("lam", "mu", "tau"))
        n = record.get("n")
        if n is not None and (not isinstance(n, int) or isinstance(n, bool)):
            raise ValueError("n must be an integer or null")
        value = record["value"]
        if not isinstance(value, str) or not _DECIMAL.fullmatch(value):
            raise ValueError("value must be a nonnegative decimal string")
        # size rules per kind live on the record model
        CoefficientRecord(kind=kind, lam=lam, mu=mu, tau=tau, n=n, value=int(value))
        key = make_key(kind, lam, mu, tau, n)
    except Exception as exc:
        raise CorruptEntryError.from_exception(
            exc, message="Malformed cache entry", operation="cache_get"
        ) from exc
    return key, str(int(value))


# =============================================================================
# LAYER 1: STORAGE IMPLEMENTATIONS
# =============================================================================


class L1Storage:
    """
    In-memory LRU storage.

    STAGE-2.1: L1 in-memory cache

    - OrderedDict for O(1) access and LRU ordering
    - threading.Lock, since suites and table builds may fan out across threads
    - Evicts the least recently used entry when full
    """

    def __init__(self, max_size: int = 4096):
        self._max_size = max_size
        self._cache: OrderedDict[str, str] = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key: str) -> str | None:
        with self._lock:
            if key in self._cache:
                self._cache.move_to_end(key)
                return self._cache[key]
            return None

    def set(self, key: str, value: str) -> bool:
        with self._lock:
            fresh = key not in self._cache
            if not fresh:
                self._cache.move_to_end(key)
            self._cache[key] = value
            while len(self._cache) > self._max_size:
                self._cache.popitem(last=False)
            return fresh

    def keys(self) -> list[str]:
        """Keys in LRU order (oldest first)."""
        with self._lock:
            return list(self._cache.keys())

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()

    def get_size(self) -> int:
        return len(self._cache)

    def get_max_size(self) -> int:
        return self._max_size


class JsonLinesStorage:
    """
    Persistent JSON-lines storage.

    STAGE-2.2: L2 file cache

    The file is read once, lazily. ``set`` and ``set_many`` rewrite it through
    a temporary file in the same directory followed by ``os.replace``.
    """

    def __init__(self, path: str | os.PathLike):
        self._path = Path(path)
        self._entries: dict[str, str] | None = None
        self._lines: list[bytes] = []
        self._lock = threading.Lock()
        self.skipped_lines = 0

    @property
    def path(self) -> Path:
        return self._path

    def _load(self) -> dict[str, str]:
        if self._entries is not None:
            return self._entries
        entries: dict[str, str] = {}
        lines: list[bytes] = []
        try:
            raw = self._path.read_bytes() if self._path.exists() else b""
        except OSError as exc:
            raise CacheIOError.from_exception(
                exc, operation="cache_get", path=str(self._path)
            ) from exc
        for number, line in enumerate(raw.splitlines(), start=1):
            if not line.strip():
                continue
            lines.append(line)
            try:
                key, value = decode_entry(line)
            except CorruptEntryError as exc:
                self.skipped_lines += 1
                log_stage(
                    logger,
                    Stage.CACHE_PERSISTENCE,
                    "Skipping corrupt cache line",
                    level="warning",
                    path=str(self._path),
                    line=number,
                    reason=exc.details.get("original_message"),
                )
                continue
            entries.setdefault(key, value)
        self._entries, self._lines = entries, lines
        return entries

    def get(self, key: str) -> str | None:
        with self._lock:
            return self._load().get(key)

    def set(self, key: str, value: str) -> bool:
        return self.set_many([(key, value)]) == 1

    def set_many(self, items: Iterable[tuple[str, str]]) -> int:
        """Append entries for new keys in one atomic rewrite; returns how many were new."""
        with self._lock:
            entries = self._load()
            fresh: list[bytes] = []
            for key, value in items:
                if key in entries:
                    continue
                entries[key] = value
                fresh.append(encode_entry(key, value))
            if fresh:
                self._replace(self._lines + fresh)
                self._lines.extend(fresh)
            return len(fresh)

    def _replace(self, lines: list[bytes]) -> None:
        directory = self._path.parent
        try:
            directory.mkdir(parents=True, exist_ok=True)
            fd, tmp_name = tempfile.mkstemp(prefix=f".{self._path.name}.", dir=directory)
            try:
                with os.fdopen(fd, "wb") as handle:
                    handle.write(b"".join(line + b"\n" for line in lines))
                os.replace(tmp_name, self._path)
            except BaseException:
                if os.path.exists(tmp_name):
                    os.unlink(tmp_name)
                raise
        except OSError as exc:
            raise CacheIOError.from_exception(
                exc, operation="cache_put", path=str(self._path)
            ) from exc
        log_stage(
            logger,
            Stage.CACHE_PERSISTENCE,
            "Cache file replaced",
            level="debug",
            path=str(self._path),
            entries=len(lines),
        )

    def keys(self) -> list[str]:
        with self._lock:
            return list(self._load())


# =============================================================================
# LAYER 2: STRATEGY
# =============================================================================


class CacheStrategy:
    """
    L1→L2 lookups with L1 warming on L2 hits.

    GET: L1 → L2 → miss
    SET: L2 first (when configured), then L1 mirrors the stored value
    """

    def __init__(self, l1: L1Storage, l2: CoefficientStore | None = None):
        self._l1 = l1
        self._l2 = l2

    def get(self, key: str) -> tuple[str | None, CacheSource]:
        value = self._l1.get(key)
        if value is not None:
            return value, "l1"
        if self._l2 is not None:
            value = self._l2.get(key)
            if value is not None:
                self._l1.set(key, value)
                return value, "l2"
        return None, "miss"

    def set_many(self, items: list[tuple[str, str]]) -> int:
        """Store new keys; a key already present keeps its first value."""
        if self._l2 is None:
            fresh = 0
            for key, value in items:
                if self._l1.get(key) is None:
                    self._l1.set(key, value)
                    fresh += 1
            return fresh
        fresh = self._l2.set_many(items)
        for key, _ in items:
            self._l1.set(key, self._l2.get(key))
        return fresh


# =============================================================================
# LAYER 3: OBSERVABILITY
# =============================================================================


class CacheObserver:
    """Hit/miss counters and stage logging for cache operations."""

    def __init__(self, logger_instance=None):
        self._logger = logger_instance or logger
        self._hits_l1 = 0
        self._hits_l2 = 0
        self._misses = 0
        self._lock = threading.Lock()

    def record_get(self, source: CacheSource, key: str) -> None:
        with self._lock:
            if source == "l1":
                self._hits_l1 += 1
            elif source == "l2":
                self._hits_l2 += 1
            else:
                self._misses += 1
        log_stage(self._logger, Stage.CACHE_LOOKUP, f"Cache {source}", level="debug", key=key)

    def get_stats(self) -> dict[str, Any]:
        total = self._hits_l1 + self._hits_l2 + self._misses
        hit_rate = (self._hits_l1 + self._hits_l2) / total if total > 0 else 0.0
        return {
            "l1_hits": self._hits_l1,
            "l2_hits": self._hits_l2,
            "misses": self._misses,
            "total_requests": total,
            "hit_rate": round(hit_rate, 3),
        }


# =============================================================================
# LAYER 4: PUBLIC API
# =============================================================================


class CoefficientCache:
    """
    Public cache API over integer coefficient values.

    Usage:
        cache = CoefficientCache.from_settings(path="table.jsonl")
        key = make_key(CoefficientKind.REDUCED, lam, mu, tau)
        value = cache.get_or_compute(key, lambda: reduced_kronecker(lam, mu, tau))
    """

    def __init__(self, path: str | os.PathLike | None = None, l1_size: int = 4096):
        self._l1 = L1Storage(max_size=l1_size)
        self._l2 = JsonLinesStorage(path) if path else None
        self._strategy = CacheStrategy(self._l1, self._l2)
        self._observer = CacheObserver()

    @classmethod
    def from_settings(cls, path: str | os.PathLike | None = None) -> "CoefficientCache":
        """Build a cache; ``path`` overrides KRON_CACHE."""
        settings = get_settings().cache
        return cls(path=path or settings.KRON_CACHE, l1_size=settings.KRON_L1_CACHE_SIZE)

    @property
    def path(self) -> Path | None:
        return self._l2.path if self._l2 else None

    def get(self, key: str) -> int | None:
        """cache_get: the stored value, or None."""
        raw, source = self._strategy.get(key)
        self._observer.record_get(source, key)
        return None if raw is None else int(raw)

    def put(self, key: str, value: int) -> None:
        """cache_put: store a value; an existing key keeps its first value."""
        self.put_many([(key, value)])

    def put_many(self, items: Iterable[tuple[str, int]]) -> int:
        return self._strategy.set_many([(key, str(value)) for key, value in items])

    def get_or_compute(self, key: str, compute_fn: Callable[[], int]) -> int:
        """Cache-aside lookup."""
        cached = self.get(key)
        if cached is not None:
            return cached
        value = compute_fn()
        self.put(key, value)
        return value

    def stats(self) -> dict[str, Any]:
        return {
            **self._observer.get_stats(),
            "l1_size": self._l1.get_size(),
            "l1_max_size": self._l1.get_max_size(),
            "path": str(self.path) if self.path else None,
            "skipped_lines": self._l2.skipped_lines if self._l2 else 0,
        }
