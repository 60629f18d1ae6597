"""
Coefficients

Kronecker g, Littlewood-Richardson c and reduced Kronecker gbar, plus
stabilization sequences and the generic-parameter tensor decomposition.

gbar is evaluated at the explicit stable point
    n* = max(|mu| + |tau| + mu_1 + tau_1, |lam| + lam_1, |mu| + mu_1, |tau| + tau_1)
after a size-triangle short-circuit; c is computed from characters of
S_a x S_b, with the lattice-word tableau count as an independent check in
verification builds.

Author: System Architect
Date: 2026-02-11
"""

from collections.abc import Iterator
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial

from src.core.config.constants import Stage
from src.core.config.settings import get_settings
from src.core.exceptions import BoundViolationError, InternalError, SizeMismatchError
from src.core.logging import get_logger, log_stage
from src.kronecker.models.partition import Partition
from src.kronecker.models.records import StabilizationWindow
from src.kronecker.services.characters import (
    character_table,
    partitions_of,
    triple_inner,
    z_value,
)
from src.kronecker.services.partitions import tilde

logger = get_logger(__name__)


# ============================================================================
# Bounds
# ============================================================================


def stretch_bound(*partitions: Partition) -> int:
    """N = max(|p| + p_1): smallest n at which every tilde(p, n) exists."""
    return max((p.size + p.first for p in partitions), default=0)


def stable_bound(lam: Partition, mu: Partition, tau: Partition) -> int:
    """n* at which g(tilde(lam, n), tilde(mu, n), tilde(tau, n)) has reached gbar."""
    return max(mu.size + tau.size + mu.first + tau.first, stretch_bound(lam, mu, tau))


def violates_size_triangle(lam: Partition, mu: Partition, tau: Partition) -> bool:
    return (
        lam.size > mu.size + tau.size
        or mu.size > lam.size + tau.size
        or tau.size > lam.size + mu.size
    )


# ============================================================================
# Kronecker
# ============================================================================


def kronecker(lam: Partition, mu: Partition, tau: Partition) -> int:
    """
    g^lam_{mu,tau} for partitions of the same n.

    Raises:
        SizeMismatchError: sizes differ
    """
    return triple_inner(lam, mu, tau)


def kronecker_at(lam: Partition, mu: Partition, tau: Partition, n: int) -> int:
    """g of the three diagrams stretched to n (n >= N)."""
    return kronecker(tilde(lam, n), tilde(mu, n), tilde(tau, n))


# ============================================================================
# Littlewood-Richardson
# ============================================================================


def _merge_cycle_types(alpha: Partition, beta: Partition) -> Partition:
    return Partition(sorted((*alpha.parts, *beta.parts), reverse=True))


def lr_by_characters(lam: Partition, mu: Partition, tau: Partition) -> int:
    """
    Multiplicity of mu x tau in the restriction of lam to S_|mu| x S_|tau|.

    Sums chi^lam(alpha u beta) chi^mu(alpha) chi^tau(beta) weighted by the
    class sizes of S_a x S_b and divides by a! b!.
    """
    a, b = mu.size, tau.size
    big = character_table(lam.size).row(lam)
    left = character_table(a).row(mu)
    right = character_table(b).row(tau)
    total = 0
    for alpha in partitions_of(a):
        size_alpha = factorial(a) // z_value(alpha)
        chi_mu = left[alpha]
        if not chi_mu:
            continue
        for beta in partitions_of(b):
            chi_tau = right[beta]
            if not chi_tau:
                continue
            size_beta = factorial(b) // z_value(beta)
            weight = size_alpha * size_beta * chi_mu * chi_tau
            total += weight * big[_merge_cycle_types(alpha, beta)]
    quotient, remainder = divmod(total, factorial(a) * factorial(b))
    if remainder:
        raise InternalError(
            "Restriction sum is not divisible by |S_a x S_b|",
            operation="littlewood_richardson",
            details={"lam": lam.encode(), "mu": mu.encode(), "tau": tau.encode()},
        )
    return quotient


def _row_fillings(
    width: int, largest: int, above: tuple[int, ...], offset: int, above_offset: int
) -> Iterator[tuple[int, ...]]:
    for row in combinations_with_replacement(range(1, largest + 1), width):
        ok = True
        for k, value in enumerate(row):
            col = offset + k
            j = col - above_offset
            if 0 <= j < len(above) and above[j] >= value:
                ok = False
                break
        if ok:
            yield row


def lr_by_tableaux(lam: Partition, mu: Partition, tau: Partition) -> int:
    """
    Count LR tableaux of shape lam/mu and content tau.

    Rows weakly increase, columns strictly increase, and the reverse reading
    word (right to left, top to bottom) is a lattice word.
    """
    if lam.size != mu.size + tau.size or not lam.contains(mu):
        return 0
    content_limit = tau.parts
    rows = lam.length

    def fill(i: int, above: tuple[int, ...], above_offset: int, counts: tuple[int, ...]) -> int:
        if i > rows:
            return 1 if counts == content_limit else 0
        start, end = mu.row(i), lam.row(i)
        largest = min(i, len(content_limit))
        found = 0
        for row in _row_fillings(end - start, largest, above, start, above_offset):
            current = list(counts)
            lattice = True
            for value in reversed(row):
                current[value - 1] += 1
                if current[value - 1] > content_limit[value - 1] or (
                    value > 1 and current[value - 1] > current[value - 2]
                ):
                    lattice = False
                    break
            if lattice:
                found += fill(i + 1, row, start, tuple(current))
        return found

    if tau.size == 0:
        return 1
    return fill(1, (), 0, (0,) * len(content_limit))


def littlewood_richardson(lam: Partition, mu: Partition, tau: Partition) -> int:
    """
    c^lam_{mu,tau}.

    The character method is authoritative; with KRON_VERIFY set the tableau
    count must agree or InternalError is raised.

    Raises:
        SizeMismatchError: |lam| != |mu| + |tau|
    """
    if lam.size != mu.size + tau.size:
        raise SizeMismatchError(
            "Littlewood-Richardson coefficient needs |lam| = |mu| + |tau|",
            operation="littlewood_richardson",
            details={"lam": lam.encode(), "mu": mu.encode(), "tau": tau.encode()},
        )
    value = lr_by_characters(lam, mu, tau)
    if get_settings().KRON_VERIFY:
        check = lr_by_tableaux(lam, mu, tau)
        if check != value:
            raise InternalError(
                "Littlewood-Richardson methods disagree",
                operation="littlewood_richardson",
                details={
                    "lam": lam.encode(),
                    "mu": mu.encode(),
                    "tau": tau.encode(),
                    "characters": value,
                    "tableaux": check,
                },
            )
    return value


# ============================================================================
# Reduced Kronecker
# ============================================================================


@lru_cache(maxsize=None)
def _reduced_at_stable_point(lam: Partition, mu: Partition, tau: Partition) -> int:
    n_star = stable_bound(lam, mu, tau)
    log_stage(
        logger,
        Stage.COEFFICIENT_EVALUATION,
        "Evaluating gbar",
        level="debug",
        lam=lam.encode(),
        mu=mu.encode(),
        tau=tau.encode(),
        n_star=n_star,
    )
    return kronecker_at(lam, mu, tau, n_star)


def reduced_kronecker(
    lam: Partition, mu: Partition, tau: Partition, short_circuit: bool = True
) -> int:
    """
    gbar^lam_{mu,tau}.

    Returns 0 without character work when the sizes violate the triangle
    inequalities; pass short_circuit=False to evaluate anyway.
    """
    if short_circuit and violates_size_triangle(lam, mu, tau):
        return 0
    return _reduced_at_stable_point(lam, mu, tau)


def stabilization_sequence(
    lam: Partition, mu: Partition, tau: Partition, n_from: int, n_to: int
) -> StabilizationWindow:
    """
    Samples (n, g(tilde(lam, n), tilde(mu, n), tilde(tau, n))) for n_from..n_to.

    Raises:
        BoundViolationError: n_from < N or n_to < n_from
    """
    n_start = stretch_bound(lam, mu, tau)
    if n_from < n_start:
        raise BoundViolationError(
            "Stabilization window must start at N or later",
            operation="stabilization_sequence",
            details={"n_from": n_from, "N": n_start},
        )
    if n_to < n_from:
        raise BoundViolationError(
            "Stabilization window is empty",
            operation="stabilization_sequence",
            details={"n_from": n_from, "n_to": n_to},
        )
    samples = tuple((n, kronecker_at(lam, mu, tau, n)) for n in range(n_from, n_to + 1))
    return StabilizationWindow(
        lam=lam,
        mu=mu,
        tau=tau,
        n_start=n_start,
        n_stable=max(n_start, mu.size + tau.size + mu.first + tau.first),
        samples=samples,
    )


# ============================================================================
# Generic-parameter products
# ============================================================================


def tensor_decomposition(mu: Partition, tau: Partition) -> dict[Partition, int]:
    """
    X_mu (x) X_tau at generic t, as {lam: gbar^lam_{mu,tau}} with zeros omitted.

    Keys are ordered by size, then reverse-lexicographically.
    """
    low, high = abs(mu.size - tau.size), mu.size + tau.size
    out: dict[Partition, int] = {}
    for k in range(low, high + 1):
        for lam in partitions_of(k):
            value = reduced_kronecker(lam, mu, tau)
            if value:
                out[lam] = value
    return out


def top_degree_product(mu: Partition, tau: Partition) -> dict[Partition, int]:
    """Degree |mu| + |tau| part of the generic tensor decomposition."""
    top = mu.size + tau.size
    return {lam: v for lam, v in tensor_decomposition(mu, tau).items() if lam.size == top}


def clear_coefficient_caches() -> None:
    _reduced_at_stable_point.cache_clear()
