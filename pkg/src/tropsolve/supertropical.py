"""One-sided systems over the supertropical semiring (tangibles and ghosts)."""

from __future__ import annotations

from dataclasses import dataclass, field

from ._layered import iter_candidates, select_minimal, shadow
from .errors import KindMismatch
from .linalg import Vector
from .preprocess import SystemInstance
from .semiring import Kind, SupScalar, is_ghost, is_tangible


@dataclass
class SupSolveReport:
    xbar_sup: Vector
    xbar_sup_is_solution: bool
    tangible_condition: bool
    solvable: bool = False
    minimal_solutions: list = field(default_factory=list)
    trace: list = field(default_factory=list)
    branches: list = field(default_factory=list)
    # Candidates built from extended covers that turned out not to solve the system.
    rejected: list = field(default_factory=list)


def _require_sup(sys: SystemInstance):
    if sys.kind is not Kind.SUP:
        raise KindMismatch(f"supertropical solver got a {sys.kind.value} system")


def _tangible_support(sys, sh):
    tangible = {i for i in range(sys.m) if is_tangible(sys.b[i])}
    return [sorted(s & tangible) for s in sh.support]


def greatest_modulus_candidate(sys: SystemInstance) -> Vector:
    """Columns hitting a tangible equation stay tangible at ``xbar_j`` (or
    ``xbar_j - 1`` when one of those entries is a ghost); the others become
    the ghost ``xbar_j``.
    """
    _require_sup(sys)
    sh = shadow(sys)
    out = []
    for j, rows in enumerate(_tangible_support(sys, sh)):
        x = sh.xbar[j]
        if not rows:
            out.append(SupScalar.ghost(x))
        elif any(is_ghost(sys.A[i, j]) for i in rows):
            out.append(SupScalar.tangible(x - 1))
        else:
            out.append(SupScalar.tangible(x))
    return Vector(Kind.SUP, tuple(out))


def tangible_condition(sys: SystemInstance, xbar_sup: Vector) -> bool:
    """Every tangible equation is attained at full modulus by exactly one column."""
    _require_sup(sys)
    sh = shadow(sys)
    hits = {i: 0 for i in range(sys.m) if is_tangible(sys.b[i])}
    for j, rows in enumerate(_tangible_support(sys, sh)):
        if xbar_sup[j].magnitude == sh.xbar[j]:
            for i in rows:
                hits[i] += 1
    return all(count == 1 for count in hits.values())


def greatest_modulus_solution(sys: SystemInstance) -> Vector | None:
    xs = greatest_modulus_candidate(sys)
    return xs if sys.is_solution(xs) else None


def unique_solution_check(sys: SystemInstance) -> Vector | None:
    """The unique solution when ``b`` is all tangible, the tangible condition
    holds and every candidate component attains some equation; else ``None``.
    """
    _require_sup(sys)
    if not all(is_tangible(bi) for bi in sys.b):
        return None
    xs = greatest_modulus_candidate(sys)
    if not tangible_condition(sys, xs):
        return None
    sh = shadow(sys)
    if any(xs[j].magnitude != sh.xbar[j] or not sh.support[j] for j in range(sys.n)):
        return None
    return xs if sys.is_solution(xs) else None


def _check_sets(sys: SystemInstance, xs: Vector):
    A, b = sys.A, sys.b

    def check_sets(K1, d, lhs, M):
        return {
            j: frozenset(i for i in M if xs[j].magnitude + A[i, j].magnitude == b[i].magnitude)
            for j in range(sys.n) if j not in K1
        }

    return check_sets


def iter_solutions(sys: SystemInstance):
    """Verified (not necessarily minimal) solutions from the two-stage covers, lazily."""
    xs = greatest_modulus_candidate(sys)
    for c in iter_candidates(sys, xs, is_ghost, _check_sets(sys, xs)):
        if c.is_solution:
            yield c.vector


def minimal_modulus_solutions(sys: SystemInstance) -> SupSolveReport:
    """All minimal-modulus solutions, one representative per modulus vector.

    Unlike the symmetrized case an extended cover need not give a solution,
    so every candidate is verified and failures are kept in ``rejected``.
    """
    xs = greatest_modulus_candidate(sys)
    report = SupSolveReport(xs, sys.is_solution(xs), tangible_condition(sys, xs))
    candidates = iter_candidates(sys, xs, is_ghost, _check_sets(sys, xs), report.branches)
    sols, traces, rejected = select_minimal(sys, xs, candidates)
    report.minimal_solutions = sols
    report.trace = traces
    report.rejected = [c.vector for c in rejected]
    report.solvable = bool(sols)
    return report
