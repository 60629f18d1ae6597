"""
Deligne Structure

Combinatorics of Rep(S_t) at an integer parameter t = n: equivalence classes
of diagrams, their chains, lifts to generic t, Hom dimensions inside blocks,
the simple/projective classification, tensor multiplicities at t = n and
dimension polynomials.

Equivalence is decided on finite mu-sequence prefixes of length
K = max(l(a), l(b), |n - |a||, |n - |b||) + 2; past K both sequences are the
forced tail -i, so multiset equality of the prefixes decides the class.

Author: System Architect
Date: 2026-02-11
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache

import sympy

from src.core.config.constants import Stage
from src.core.config.settings import get_settings
from src.core.exceptions import (
    BoundViolationError,
    InternalError,
    NegativeMultiplicityError,
)
from src.core.logging import get_logger, log_stage
from src.kronecker.models.deligne import (
    ClassChain,
    ClassPosition,
    DimensionPolynomial,
    ObjectStatus,
)
from src.kronecker.models.partition import Partition
from src.kronecker.services.coefficients import reduced_kronecker, stable_bound
from src.kronecker.services.partitions import dim_irrep, mu_sequence, tilde

logger = get_logger(__name__)

_T = sympy.Symbol("T")


def _check_parameter(n: int, operation: str) -> None:
    if n < 0:
        raise BoundViolationError(
            "Integer parameter must be nonnegative", operation=operation, details={"n": n}
        )


def is_minimal(lam: Partition, n: int) -> bool:
    """True when tilde(lam, n) exists, i.e. lam heads its class at n."""
    return n >= lam.size + lam.first


# ============================================================================
# Classes and chains
# ============================================================================


def equivalent(a: Partition, b: Partition, n: int) -> bool:
    """True iff the mu-sequences of a and b at t = n agree as multisets."""
    K = max(a.length, b.length, abs(n - a.size), abs(n - b.size)) + 2
    return mu_sequence(a, n, K).multiset() == mu_sequence(b, n, K).multiset()


def class_chain(minimal: Partition, n: int, depth: int) -> ClassChain:
    """
    Chain of the class headed by ``minimal`` with elements 0..depth materialized.

    Raises:
        NotMinimalError: n < |minimal| + minimal_1
    """
    chain = ClassChain(minimal, n)
    chain.extend_to(depth)
    return chain


def _class_members_up_to(lam: Partition, n: int) -> list[Partition]:
    """Every diagram of lam's class with size <= |lam|, read off the mu-multiset."""
    K = max(lam.length, abs(n - lam.size), n, lam.size) + 2
    prefix = mu_sequence(lam, n, K).prefix
    members: list[Partition] = []
    for x in sorted(set(prefix), reverse=True):
        rest = list(prefix)
        rest.remove(x)
        rest.sort(reverse=True)
        if any(rest[i] <= rest[i + 1] for i in range(len(rest) - 1)):
            continue
        rows = [s + i for i, s in enumerate(rest, start=1)]
        if rows[-1] < 0 or any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            continue
        candidate = Partition(rows)
        if x != n - candidate.size or candidate.size > lam.size:
            continue
        members.append(candidate)
    return members


@lru_cache(maxsize=65536)
def locate_in_class(lam: Partition, n: int) -> ClassPosition:
    """
    Position of lam in its n-class: Trivial, or NonTrivial(minimal, index).

    Example:
        >>> locate_in_class(Partition((3, 1)), 5)
        ClassPosition(minimal=Partition(2, 1), index=1)
    """
    _check_parameter(n, "locate_in_class")
    if is_minimal(lam, n):
        return ClassPosition.nontrivial(lam, 0)

    members = _class_members_up_to(lam, n)
    if lam not in members:
        raise InternalError(
            "Diagram missing from its own class reconstruction",
            operation="locate_in_class",
            details={"lam": lam.encode(), "n": n},
        )
    head = min(members, key=lambda p: p.size)
    if not is_minimal(head, n):
        return ClassPosition.trivial()

    index = ClassChain(head, n).index_of(lam)
    if index is None:
        raise InternalError(
            "Diagram is equivalent to a minimal diagram but absent from its chain",
            operation="locate_in_class",
            details={"lam": lam.encode(), "n": n, "minimal": head.encode()},
        )
    log_stage(
        logger,
        Stage.DELIGNE_CLASS,
        "Located diagram in class",
        level="debug",
        lam=lam.encode(),
        n=n,
        minimal=head.encode(),
        index=index,
    )
    return ClassPosition.nontrivial(head, index)


def trivial_class_criterion(lam: Partition, n: int) -> bool:
    """n in {|lam| + lam_l - l : 1 <= l <= |lam|}."""
    return any(n == lam.size + lam.row(l) - l for l in range(1, lam.size + 1))


def is_trivial_class(lam: Partition, n: int) -> bool:
    """
    True iff lam is alone in its n-class.

    With KRON_VERIFY set, the answer is checked against the closed-form
    criterion n in {|lam| + lam_l - l}.
    """
    trivial = locate_in_class(lam, n).is_trivial
    if get_settings().KRON_VERIFY and trivial != trivial_class_criterion(lam, n):
        raise InternalError(
            "Trivial-class criterion disagrees with class reconstruction",
            operation="is_trivial_class",
            details={"lam": lam.encode(), "n": n, "located_trivial": trivial},
        )
    return trivial


# ============================================================================
# Lifts, Hom dimensions, status
# ============================================================================


def lift(lam: Partition, n: int) -> list[Partition]:
    """
    Generic-t decomposition of X_lam at t = n, as a multiset (list).

    {lam} for a trivial class or index 0, else {lam^(i), lam^(i-1)}.
    """
    position = locate_in_class(lam, n)
    if position.is_trivial or position.index == 0:
        return [lam]
    chain = ClassChain(position.minimal, n)
    return [chain[position.index], chain[position.index - 1]]


def hom_dim(a: Partition, b: Partition, n: int) -> int:
    """dim Hom(X_a, X_b) at t = n."""
    if not equivalent(a, b, n):
        return 0
    pa, pb = locate_in_class(a, n), locate_in_class(b, n)
    if pa.is_trivial or pb.is_trivial:
        return 1 if a == b else 0
    gap = abs(pa.index - pb.index)
    if gap == 0:
        return 2 if pa.index >= 1 else 1
    return 1 if gap == 1 else 0


def hom_dim_via_lift(a: Partition, b: Partition, n: int) -> int:
    """Count of common summands of lift(a) and lift(b); equals hom_dim."""
    left, right = Counter(lift(a, n)), Counter(lift(b, n))
    return sum(m * right[p] for p, m in left.items())


def object_status(lam: Partition, n: int) -> ObjectStatus:
    position = locate_in_class(lam, n)
    if position.is_trivial:
        return ObjectStatus.SIMPLE_PROJECTIVE
    if position.index == 0:
        return ObjectStatus.SIMPLE_NON_PROJECTIVE
    return ObjectStatus.PROJECTIVE


def specialize(lam: Partition, n: int) -> Partition | None:
    """Image of X_lam in Rep(S_n): tilde(lam, n), or None when X_lam is negligible."""
    return tilde(lam, n) if is_minimal(lam, n) else None


def is_semisimple_parameter(max_power: int, n: int) -> bool:
    """True iff n lies outside {0, ..., 2 * max_power - 2}."""
    return not 0 <= n <= 2 * max_power - 2


# ============================================================================
# Alternating sums over chains
# ============================================================================


def _assert_truncation(
    target: Partition, mu: Partition, tau: Partition, operation: str
) -> None:
    settings = get_settings()
    if not settings.KRON_VERIFY:
        return
    if stable_bound(target, mu, tau) > settings.KRON_VERIFY_TRUNCATION_MAX_N:
        return
    value = reduced_kronecker(target, mu, tau, short_circuit=False)
    if value:
        raise InternalError(
            "Truncated alternating-sum term is nonzero",
            operation=operation,
            details={
                "lam": target.encode(),
                "mu": mu.encode(),
                "tau": tau.encode(),
                "value": value,
            },
        )


def chain_partial_sums(
    chain: ClassChain, start: int, mu: Partition, tau: Partition
) -> list[int]:
    """
    P_k = sum_{j <= k} (-1)^j gbar^{lam^(start + j)}_{mu,tau}.

    Stops before the first element with |lam| > |mu| + |tau|, where every
    later term vanishes.
    """
    bound = mu.size + tau.size
    sums: list[int] = []
    running = 0
    j = 0
    while (elem := chain[start + j]).size <= bound:
        term = reduced_kronecker(elem, mu, tau)
        running += -term if j % 2 else term
        sums.append(running)
        j += 1
    _assert_truncation(elem, mu, tau, "chain_partial_sums")
    return sums


def alternating_chain_sum(
    minimal: Partition, n: int, mu: Partition, tau: Partition, start: int = 0
) -> int:
    """sum_{j >= 0} (-1)^j gbar^{lam^(start + j)}_{mu,tau} over the chain of ``minimal``."""
    sums = chain_partial_sums(ClassChain(minimal, n), start, mu, tau)
    return sums[-1] if sums else 0


def partial_sums(lam: Partition, mu: Partition, tau: Partition, n: int) -> list[int]:
    """Partial sums of the alternating sum over the chain headed by lam (minimal at n)."""
    return chain_partial_sums(ClassChain(lam, n), 0, mu, tau)


def multiplicity_at_integer(mu: Partition, tau: Partition, lam: Partition, n: int) -> int:
    """
    [X_mu (x) X_tau : X_lam] at t = n.

    Lifts mu and tau to generic t, and for lam at chain index i sums
    (-1)^j gbar^{lam^(i+j)}_{a,b} over j >= 0 and every pair of lifted summands.

    Raises:
        NegativeMultiplicityError: the result is negative (implementation bug)
    """
    _check_parameter(n, "multiplicity_at_integer")
    position = locate_in_class(lam, n)
    pairs = [(a, b) for a in lift(mu, n) for b in lift(tau, n)]

    if position.is_trivial:
        total = sum(reduced_kronecker(lam, a, b) for a, b in pairs)
    else:
        bound = max(a.size + b.size for a, b in pairs)
        chain = ClassChain(position.minimal, n)
        total = 0
        j = 0
        while (elem := chain[position.index + j]).size <= bound:
            term = sum(reduced_kronecker(elem, a, b) for a, b in pairs)
            total += -term if j % 2 else term
            j += 1
        for a, b in pairs:
            _assert_truncation(elem, a, b, "multiplicity_at_integer")

    if total < 0:
        raise NegativeMultiplicityError(
            "Tensor multiplicity came out negative",
            operation="multiplicity_at_integer",
            details={
                "mu": mu.encode(),
                "tau": tau.encode(),
                "lam": lam.encode(),
                "n": n,
                "value": total,
            },
        )
    return total


# ============================================================================
# Dimension polynomials
# ============================================================================


@lru_cache(maxsize=256)
def dimension_polynomial(lam: Partition) -> DimensionPolynomial:
    """
    P_lam(T), interpolated exactly through (n, dim tilde(lam, n)) for the
    |lam| + 1 values of n starting at |lam| + lam_1.

    Example:
        >>> str(dimension_polynomial(Partition((2,))))
        'T**2/2 - 3*T/2'
    """
    start = lam.size + lam.first
    points = [(n, dim_irrep(tilde(lam, n))) for n in range(start, start + lam.size + 1)]
    if len(points) == 1:
        return DimensionPolynomial(lam=lam, coeffs=(Fraction(points[0][1]),))
    expr = sympy.interpolate(points, _T)
    coeffs = sympy.Poly(expr, _T, domain=sympy.QQ).all_coeffs()
    exact = tuple(Fraction(int(c.p), int(c.q)) for c in reversed(coeffs))
    return DimensionPolynomial(lam=lam, coeffs=exact)


def categorical_dimension(lam: Partition, t: int) -> Fraction:
    """P_lam(t)."""
    return dimension_polynomial(lam)(t)


def clear_deligne_caches() -> None:
    locate_in_class.cache_clear()
    dimension_polynomial.cache_clear()
