"""
Identity Suite

Falsifiable checks of the coefficient and Deligne-category identities over
exhaustively enumerated desk-scale inputs. Each suite returns a
VerificationReport; a suite passes iff it records no violations.

Enumeration is reverse-lexicographic over partitions and lexicographic over
tuples. Cases may run on a thread pool (KRON_WORKERS); results are merged in
input order, so reports do not depend on the schedule.

n windows are offsets from the case's N = max(|p| + p_1): (0, 4) means
n in [N, N + 4].

The partial-sum sandwich is checked as P_{2k+1} <= g <= P_{2k}: P_0 is the
first reduced coefficient, which already bounds g from above, and the tail
after an odd partial sum is a multiplicity.

Author: System Architect
Date: 2026-02-11
"""

from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations, product
from typing import Any, TypeVar

from src.core.config.constants import (
    SUITE_DEFAULT_DAGGER_N,
    SUITE_DEFAULT_MAX_SIZE,
    SUITE_DEFAULT_N_MAX,
    SUITE_DEFAULT_N_WINDOW,
    SUITE_SEMISIMPLE_SPAN,
    Stage,
)
from src.core.config.settings import get_settings
from src.core.exceptions import KroneckerError
from src.core.logging import get_logger, log_stage
from src.core.observability import get_tracker
from src.kronecker.models.deligne import ClassChain
from src.kronecker.models.partition import Partition
from src.kronecker.models.report import VerificationReport, Violation
from src.kronecker.services.characters import partitions_of, partitions_up_to
from src.kronecker.services.coefficients import (
    kronecker,
    kronecker_at,
    littlewood_richardson,
    lr_by_characters,
    lr_by_tableaux,
    reduced_kronecker,
    stable_bound,
    stretch_bound,
    top_degree_product,
    violates_size_triangle,
)
from src.kronecker.services.deligne import (
    alternating_chain_sum,
    chain_partial_sums,
    dimension_polynomial,
    equivalent,
    hom_dim,
    hom_dim_via_lift,
    is_minimal,
    is_semisimple_parameter,
    is_trivial_class,
    locate_in_class,
    multiplicity_at_integer,
    trivial_class_criterion,
)
from src.kronecker.services.partitions import bar, dagger

logger = get_logger(__name__)

Case = TypeVar("Case")
Outcome = list[Violation]


# ============================================================================
# Runner
# ============================================================================


def _encode(**values: Any) -> dict[str, Any]:
    return {k: v.encode() if isinstance(v, Partition) else v for k, v in values.items()}


def _violation(expected: Any, actual: Any, **inputs: Any) -> Violation:
    return Violation(input=_encode(**inputs), expected=str(expected), actual=str(actual))


def _guarded(check: Callable[[Case], Outcome], case: Case) -> Outcome:
    try:
        return check(case)
    except KroneckerError as exc:
        return [
            Violation(
                input={"case": repr(case)},
                expected="no error",
                actual=f"{type(exc).__name__}: {exc.message}",
            )
        ]


def _run_suite(
    suite: str,
    cases: Sequence[Case],
    check: Callable[[Case], Outcome],
    workers: int | None = None,
) -> VerificationReport:
    workers = workers or get_settings().KRON_WORKERS
    tracker = get_tracker()

    with (
        tracker.run_scope() as run_id,
        tracker.track_stage(Stage.VERIFICATION.value, suite, run_id, cases=len(cases)),
    ):
        if workers > 1 and len(cases) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                outcomes = list(pool.map(lambda c: _guarded(check, c), cases))
        else:
            outcomes = [_guarded(check, c) for c in cases]

    violations = tuple(v for outcome in outcomes for v in outcome)
    log_stage(
        logger,
        Stage.VERIFICATION,
        "Suite finished",
        level="warning" if violations else "info",
        suite=suite,
        cases=len(cases),
        violations=len(violations),
    )
    return VerificationReport(suite=suite, cases=len(cases), violations=violations)


def _triples(max_size: int) -> list[tuple[Partition, Partition, Partition]]:
    pool = partitions_up_to(max_size)
    return list(product(pool, pool, pool))


def _windowed(
    triples: Iterable[tuple[Partition, Partition, Partition]], window: tuple[int, int]
) -> list[tuple[Partition, Partition, Partition, int]]:
    lo, hi = window
    cases = []
    for lam, mu, tau in triples:
        N = stretch_bound(lam, mu, tau)
        cases.extend((lam, mu, tau, n) for n in range(N + lo, N + hi + 1))
    return cases


def _minimal_diagrams(n: int, max_size: int) -> list[Partition]:
    return [p for p in partitions_up_to(max_size) if is_minimal(p, n)]


# ============================================================================
# Stretched-coefficient identities
# ============================================================================


def check_alternating_sum(
    max_size: int = SUITE_DEFAULT_MAX_SIZE,
    n_window: tuple[int, int] = SUITE_DEFAULT_N_WINDOW,
    workers: int | None = None,
) -> VerificationReport:
    """g(tilde(lam,n), tilde(mu,n), tilde(tau,n)) = sum_i (-1)^i gbar^{lam^(i)}_{mu,tau}."""

    def check(case: tuple[Partition, Partition, Partition, int]) -> Outcome:
        lam, mu, tau, n = case
        lhs = kronecker_at(lam, mu, tau, n)
        rhs = alternating_chain_sum(lam, n, mu, tau)
        return [] if lhs == rhs else [_violation(lhs, rhs, lam=lam, mu=mu, tau=tau, n=n)]

    return _run_suite("alternating", _windowed(_triples(max_size), n_window), check, workers)


def check_maximum_and_sandwich(
    max_size: int = SUITE_DEFAULT_MAX_SIZE,
    n_window: tuple[int, int] = SUITE_DEFAULT_N_WINDOW,
    workers: int | None = None,
) -> VerificationReport:
    """gbar >= g(n), and every partial sum satisfies P_{2k+1} <= g <= P_{2k}."""

    def check(case: tuple[Partition, Partition, Partition, int]) -> Outcome:
        lam, mu, tau, n = case
        g = kronecker_at(lam, mu, tau, n)
        out: Outcome = []
        gbar = reduced_kronecker(lam, mu, tau)
        if gbar < g:
            out.append(_violation(f">= {g}", gbar, lam=lam, mu=mu, tau=tau, n=n, check="max"))
        for k, p in enumerate(chain_partial_sums(ClassChain(lam, n), 0, mu, tau)):
            holds = g <= p if k % 2 == 0 else p <= g
            if not holds:
                relation = f">= {g}" if k % 2 == 0 else f"<= {g}"
                out.append(_violation(relation, p, lam=lam, mu=mu, tau=tau, n=n, k=k))
        return out

    return _run_suite("sandwich", _windowed(_triples(max_size), n_window), check, workers)


def check_dagger_identity(
    n: int = SUITE_DEFAULT_DAGGER_N, workers: int | None = None
) -> VerificationReport:
    """
    g^lam_{mu,tau} = sum_{i>=1} (-1)^{i+1} gbar^{dagger(lam,i)}_{bar mu, bar tau} for
    lam, mu, tau of n, and the dagger sequence of lam is the chain of bar(lam).
    """
    pool = partitions_of(n)

    def check(case: tuple[Partition, Partition, Partition]) -> Outcome:
        lam, mu, tau = case
        small_mu, small_tau = bar(mu), bar(tau)
        bound = small_mu.size + small_tau.size
        rhs = 0
        i = 1
        while (d := dagger(lam, i)).size <= bound:
            term = reduced_kronecker(d, small_mu, small_tau)
            rhs += term if i % 2 else -term
            i += 1
        lhs = kronecker(lam, mu, tau)
        out = [] if lhs == rhs else [_violation(lhs, rhs, lam=lam, mu=mu, tau=tau)]
        if mu == pool[0] and tau == pool[0]:
            out.extend(_chain_coincidence(lam, n))
        return out

    return _run_suite("dagger", list(product(pool, pool, pool)), check, workers)


def _chain_coincidence(lam: Partition, n: int) -> Outcome:
    chain = ClassChain(bar(lam), n)
    out: Outcome = []
    for i in range(1, lam.length + 3):
        expected, actual = chain[i - 1], dagger(lam, i)
        if expected != actual:
            out.append(_violation(expected.encode(), actual.encode(), lam=lam, n=n, i=i))
    return out


def check_stabilization(
    max_size: int = SUITE_DEFAULT_MAX_SIZE, span: int = 8, workers: int | None = None
) -> VerificationReport:
    """
    Over n in [N, N + span] the stretched sequence weakly increases and is
    constant, equal to gbar, from |mu| + |tau| + mu_1 + tau_1 on; gbar read at
    n* and n* + 1 agree.
    """

    def check(case: tuple[Partition, Partition, Partition]) -> Outcome:
        lam, mu, tau = case
        N = stretch_bound(lam, mu, tau)
        values = [(n, kronecker_at(lam, mu, tau, n)) for n in range(N, N + span + 1)]
        stable_from = max(N, mu.size + tau.size + mu.first + tau.first)
        gbar = reduced_kronecker(lam, mu, tau)
        out: Outcome = []
        for (n0, v0), (n1, v1) in zip(values, values[1:], strict=False):
            if v1 < v0:
                out.append(_violation(f">= {v0}", v1, lam=lam, mu=mu, tau=tau, n=n1))
        for n, v in values:
            if n >= stable_from and v != gbar:
                out.append(_violation(gbar, v, lam=lam, mu=mu, tau=tau, n=n, check="stable"))
        n_star = stable_bound(lam, mu, tau)
        later = kronecker_at(lam, mu, tau, n_star + 1)
        if later != reduced_kronecker(lam, mu, tau, short_circuit=False):
            out.append(_violation(gbar, later, lam=lam, mu=mu, tau=tau, n=n_star + 1))
        return out

    return _run_suite("stabilization", _triples(max_size), check, workers)


# ============================================================================
# Trivial and projective classes
# ============================================================================


def check_trivial_class_vanishing(
    max_size: int = SUITE_DEFAULT_MAX_SIZE,
    n_max: int = SUITE_DEFAULT_N_MAX,
    workers: int | None = None,
) -> VerificationReport:
    """For trivial-class mu: sum_i (-1)^i gbar^{lam^(i)}_{mu,tau} = 0 for every minimal lam."""
    pool = partitions_up_to(max_size)
    cases = [
        (lam, mu, tau, n)
        for n in range(n_max + 1)
        for mu in pool
        if is_trivial_class(mu, n)
        for tau in pool
        for lam in _minimal_diagrams(n, mu.size + tau.size)
    ]

    def check(case: tuple[Partition, Partition, Partition, int]) -> Outcome:
        lam, mu, tau, n = case
        total = alternating_chain_sum(lam, n, mu, tau)
        return [] if total == 0 else [_violation(0, total, lam=lam, mu=mu, tau=tau, n=n)]

    return _run_suite("trivial", cases, check, workers)


def check_projective_pairing(
    max_size: int = SUITE_DEFAULT_MAX_SIZE,
    n_max: int = SUITE_DEFAULT_N_MAX,
    workers: int | None = None,
) -> VerificationReport:
    """
    For mu = mu^(k), tau = tau^(l) in nontrivial classes and lam minimal:
    sum_i (-1)^i gbar^{lam^(i)}_{mu,tau} = (-1)^{k+l} g(tilde(lam), tilde(mu^(0)), tilde(tau^(0))).
    """
    pool = partitions_up_to(max_size)
    cases = []
    for n in range(n_max + 1):
        placed = [(p, locate_in_class(p, n)) for p in pool]
        nontrivial = [(p, pos) for p, pos in placed if not pos.is_trivial]
        for (mu, pos_mu), (tau, pos_tau) in product(nontrivial, nontrivial):
            for lam in _minimal_diagrams(n, mu.size + tau.size):
                cases.append((lam, mu, tau, n, pos_mu, pos_tau))

    def check(case) -> Outcome:
        lam, mu, tau, n, pos_mu, pos_tau = case
        lhs = alternating_chain_sum(lam, n, mu, tau)
        sign = -1 if (pos_mu.index + pos_tau.index) % 2 else 1
        rhs = sign * kronecker_at(lam, pos_mu.minimal, pos_tau.minimal, n)
        return [] if lhs == rhs else [_violation(rhs, lhs, lam=lam, mu=mu, tau=tau, n=n)]

    return _run_suite("projective", cases, check, workers)


# ============================================================================
# Global properties
# ============================================================================


def check_symmetry(
    max_size: int = SUITE_DEFAULT_MAX_SIZE, workers: int | None = None
) -> VerificationReport:
    """gbar is invariant under all permutations of its three arguments."""

    def check(case: tuple[Partition, Partition, Partition]) -> Outcome:
        reference = reduced_kronecker(*case)
        out: Outcome = []
        for perm in permutations(case):
            value = reduced_kronecker(*perm)
            if value != reference:
                lam, mu, tau = perm
                out.append(_violation(reference, value, lam=lam, mu=mu, tau=tau))
        return out

    return _run_suite("symmetry", _triples(max_size), check, workers)


def check_murnaghan_littlewood(
    max_size: int = SUITE_DEFAULT_MAX_SIZE, workers: int | None = None
) -> VerificationReport:
    """gbar vanishes outside the size triangle, evaluated without the short-circuit."""
    cases = [t for t in _triples(max_size) if violates_size_triangle(*t)]

    def check(case: tuple[Partition, Partition, Partition]) -> Outcome:
        value = reduced_kronecker(*case, short_circuit=False)
        lam, mu, tau = case
        return [] if value == 0 else [_violation(0, value, lam=lam, mu=mu, tau=tau)]

    return _run_suite("murnaghan-littlewood", cases, check, workers)


def check_lr_boundary(
    max_size: int = SUITE_DEFAULT_MAX_SIZE, workers: int | None = None
) -> VerificationReport:
    """On |lam| = |mu| + |tau| <= max_size: gbar = c, and both LR methods agree."""
    pool = partitions_up_to(max_size)
    cases = [
        (lam, mu, tau)
        for mu in pool
        for tau in pool
        if mu.size + tau.size <= max_size
        for lam in partitions_of(mu.size + tau.size)
    ]

    def check(case: tuple[Partition, Partition, Partition]) -> Outcome:
        lam, mu, tau = case
        out: Outcome = []
        by_chars, by_tableaux = lr_by_characters(lam, mu, tau), lr_by_tableaux(lam, mu, tau)
        if by_chars != by_tableaux:
            out.append(_violation(by_chars, by_tableaux, lam=lam, mu=mu, tau=tau, check="lr"))
        gbar = reduced_kronecker(lam, mu, tau)
        if gbar != by_chars:
            out.append(_violation(by_chars, gbar, lam=lam, mu=mu, tau=tau, check="boundary"))
        return out

    return _run_suite("lr-boundary", cases, check, workers)


def check_dimension_roots(
    max_size: int = SUITE_DEFAULT_MAX_SIZE, workers: int | None = None
) -> VerificationReport:
    """P_lam(d) = 0 iff the class of lam at d is trivial iff d in {|lam| + lam_l - l}."""
    cases = [
        (lam, d) for lam in partitions_up_to(max_size) for d in range(0, 2 * lam.size + 3)
    ]

    def check(case: tuple[Partition, int]) -> Outcome:
        lam, d = case
        root = dimension_polynomial(lam)(d) == 0
        located = is_trivial_class(lam, d)
        criterion = trivial_class_criterion(lam, d)
        if root == located == criterion:
            return []
        return [
            _violation(
                f"root={root}", f"located={located}, criterion={criterion}", lam=lam, d=d
            )
        ]

    return _run_suite("dimension-roots", cases, check, workers)


def check_global(
    max_size: int = SUITE_DEFAULT_MAX_SIZE, workers: int | None = None
) -> VerificationReport:
    """Symmetry, Murnaghan-Littlewood, LR boundary and dimension roots, merged."""
    return VerificationReport.merge(
        "global",
        [
            check_symmetry(max_size, workers),
            check_murnaghan_littlewood(max_size, workers),
            check_lr_boundary(max_size, workers),
            check_dimension_roots(max_size, workers),
        ],
    )


# ============================================================================
# Deligne-category consistency
# ============================================================================


def check_class_structure(
    max_size: int = SUITE_DEFAULT_MAX_SIZE,
    n_max: int = SUITE_DEFAULT_N_MAX,
    depth: int = 5,
    workers: int | None = None,
) -> VerificationReport:
    """
    Chains are pairwise equivalent with strictly increasing sizes, and every
    nontrivial position points back at the diagram.
    """
    cases = [(lam, n) for n in range(n_max + 1) for lam in partitions_up_to(max_size)]

    def check(case: tuple[Partition, int]) -> Outcome:
        lam, n = case
        out: Outcome = []
        position = locate_in_class(lam, n)
        if not position.is_trivial:
            chain = ClassChain(position.minimal, n)
            if chain[position.index] != lam:
                out.append(
                    _violation(lam.encode(), chain[position.index].encode(), lam=lam, n=n)
                )
        if is_minimal(lam, n):
            elements = ClassChain(lam, n).extend_to(depth)
            for i, a in enumerate(elements):
                if i and a.size <= elements[i - 1].size:
                    out.append(_violation("increasing", a.encode(), lam=lam, n=n, i=i))
                for j, b in enumerate(elements[i + 1 :], start=i + 1):
                    if not equivalent(a, b, n):
                        out.append(_violation(True, False, lam=lam, n=n, i=i, j=j))
                    if locate_in_class(b, n).index != j:
                        out.append(_violation(j, locate_in_class(b, n).index, lam=lam, n=n))
        return out

    return _run_suite("classes", cases, check, workers)


def check_hom_lift_consistency(
    max_size: int = SUITE_DEFAULT_MAX_SIZE,
    n_max: int = SUITE_DEFAULT_N_MAX,
    workers: int | None = None,
) -> VerificationReport:
    """hom_dim(a, b) = hom_dim(b, a) = common summands of lift(a) and lift(b)."""
    pool = partitions_up_to(max_size)
    cases = [(a, b, n) for n in range(n_max + 1) for a in pool for b in pool]

    def check(case: tuple[Partition, Partition, int]) -> Outcome:
        a, b, n = case
        forward, backward, lifted = hom_dim(a, b, n), hom_dim(b, a, n), hom_dim_via_lift(a, b, n)
        if forward == backward == lifted:
            return []
        return [_violation(forward, f"{backward}/{lifted}", a=a, b=b, n=n)]

    return _run_suite("hom", cases, check, workers)


def check_integer_multiplicities(
    max_size: int = SUITE_DEFAULT_MAX_SIZE,
    n_window: tuple[int, int] = SUITE_DEFAULT_N_WINDOW,
    workers: int | None = None,
) -> VerificationReport:
    """
    multiplicity_at_integer equals g of the stretched diagrams whenever N <= n,
    equals gbar at semisimple parameters, and is never negative.

    Besides the stretch window, every triple is checked at the first
    SUITE_SEMISIMPLE_SPAN semisimple parameters, which may lie below N.
    """
    triples = _triples(max_size)
    cases = _windowed(triples, n_window)
    seen = set(cases)
    for lam, mu, tau in triples:
        first = max(2 * _max_power(lam, mu, tau) - 1, 0)
        for n in range(first, first + SUITE_SEMISIMPLE_SPAN):
            if (lam, mu, tau, n) not in seen:
                cases.append((lam, mu, tau, n))

    def check(case: tuple[Partition, Partition, Partition, int]) -> Outcome:
        lam, mu, tau, n = case
        value = multiplicity_at_integer(mu, tau, lam, n)
        out: Outcome = []
        if n >= stretch_bound(lam, mu, tau):
            direct = kronecker_at(lam, mu, tau, n)
            if value != direct:
                out.append(_violation(direct, value, lam=lam, mu=mu, tau=tau, n=n))
        if is_semisimple_parameter(_max_power(lam, mu, tau), n):
            gbar = reduced_kronecker(lam, mu, tau)
            if value != gbar:
                out.append(_violation(gbar, value, lam=lam, mu=mu, tau=tau, n=n, check="ss"))
        return out

    return _run_suite("mult", cases, check, workers)


def _max_power(lam: Partition, mu: Partition, tau: Partition) -> int:
    return max(lam.size, mu.size + tau.size)


def check_top_degree(
    max_size: int = SUITE_DEFAULT_MAX_SIZE, workers: int | None = None
) -> VerificationReport:
    """The top-degree part of X_mu (x) X_tau is the Schur product s_mu s_tau."""
    pool = partitions_up_to(max_size)
    cases = [(mu, tau) for mu in pool for tau in pool]

    def check(case: tuple[Partition, Partition]) -> Outcome:
        mu, tau = case
        top = top_degree_product(mu, tau)
        out: Outcome = []
        for lam in partitions_of(mu.size + tau.size):
            expected = littlewood_richardson(lam, mu, tau)
            if top.get(lam, 0) != expected:
                out.append(_violation(expected, top.get(lam, 0), lam=lam, mu=mu, tau=tau))
        return out

    return _run_suite("top-degree", cases, check, workers)


# ============================================================================
# Registry
# ============================================================================

SUITES = (
    "alternating",
    "sandwich",
    "dagger",
    "stabilization",
    "trivial",
    "projective",
    "global",
    "classes",
    "hom",
    "mult",
    "top-degree",
    "all",
)


def run_suite(
    name: str,
    max_size: int = SUITE_DEFAULT_MAX_SIZE,
    n_max: int = SUITE_DEFAULT_N_MAX,
    n_window: tuple[int, int] = SUITE_DEFAULT_N_WINDOW,
    dagger_n: int = SUITE_DEFAULT_DAGGER_N,
    workers: int | None = None,
) -> VerificationReport:
    """Dispatch a suite by its registry name."""
    runners: dict[str, Callable[[], VerificationReport]] = {
        "alternating": lambda: check_alternating_sum(max_size, n_window, workers),
        "sandwich": lambda: check_maximum_and_sandwich(max_size, n_window, workers),
        "dagger": lambda: VerificationReport.merge(
            "dagger", [check_dagger_identity(k, workers) for k in range(1, dagger_n + 1)]
        ),
        "stabilization": lambda: check_stabilization(max_size, workers=workers),
        "trivial": lambda: check_trivial_class_vanishing(max_size, n_max, workers),
        "projective": lambda: check_projective_pairing(max_size, n_max, workers),
        "global": lambda: check_global(max_size, workers),
        "classes": lambda: check_class_structure(max_size, n_max, workers=workers),
        "hom": lambda: check_hom_lift_consistency(max_size, n_max, workers),
        "mult": lambda: check_integer_multiplicities(max_size, n_window, workers),
        "top-degree": lambda: check_top_degree(max_size, workers),
    }
    if name == "all":
        return VerificationReport.merge("all", [runners[s]() for s in SUITES if s != "all"])
    if name not in runners:
        raise KeyError(name)
    return runners[name]()
