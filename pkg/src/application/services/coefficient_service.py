"""
Coefficient Service

Cache-aware front for the coefficient families used by the CLI. Every value
goes through CoefficientCache.get_or_compute, so a configured cache file is
consulted first and populated on misses.
"""

from src.core.config.constants import CoefficientKind, Stage
from src.core.logging import get_logger, log_stage
from src.infrastructure.cache import CoefficientCache, make_key
from src.kronecker.models.partition import Partition
from src.kronecker.models.records import CoefficientRecord
from src.kronecker.services.coefficients import (
    kronecker,
    littlewood_richardson,
    reduced_kronecker,
)
from src.kronecker.services.deligne import multiplicity_at_integer

logger = get_logger(__name__)


class CoefficientService:
    """
    Computes coefficient records through the cache.

    Usage:
        service = CoefficientService(CoefficientCache.from_settings())
        record = service.reduced(lam, mu, tau)
    """

    def __init__(self, cache: CoefficientCache | None = None):
        self._cache = cache or CoefficientCache()

    @property
    def cache(self) -> CoefficientCache:
        return self._cache

    def _record(
        self,
        kind: CoefficientKind,
        lam: Partition,
        mu: Partition,
        tau: Partition,
        compute,
        n: int | None = None,
    ) -> CoefficientRecord:
        key = make_key(kind, lam, mu, tau, n)
        value = self._cache.get_or_compute(key, compute)
        log_stage(logger, Stage.COEFFICIENT_EVALUATION, "Coefficient ready", key=key)
        return CoefficientRecord(kind=kind, lam=lam, mu=mu, tau=tau, n=n, value=value)

    def kronecker(self, lam: Partition, mu: Partition, tau: Partition) -> CoefficientRecord:
        # keyed without n: the size of lam already fixes it
        return self._record(
            CoefficientKind.KRONECKER,
            lam,
            mu,
            tau,
            lambda: kronecker(lam, mu, tau),
        )

    def reduced(self, lam: Partition, mu: Partition, tau: Partition) -> CoefficientRecord:
        return self._record(
            CoefficientKind.REDUCED, lam, mu, tau, lambda: reduced_kronecker(lam, mu, tau)
        )

    def littlewood_richardson(
        self, lam: Partition, mu: Partition, tau: Partition
    ) -> CoefficientRecord:
        return self._record(
            CoefficientKind.LITTLEWOOD_RICHARDSON,
            lam,
            mu,
            tau,
            lambda: littlewood_richardson(lam, mu, tau),
        )

    def multiplicity(
        self, mu: Partition, tau: Partition, lam: Partition, n: int
    ) -> CoefficientRecord:
        return self._record(
            CoefficientKind.MULTIPLICITY,
            lam,
            mu,
            tau,
            lambda: multiplicity_at_integer(mu, tau, lam, n),
            n=n,
        )
