"""Machinery shared by the symmetrized and supertropical solvers.

Both minimal-solution algorithms have the same skeleton: cover all rows with
the support sets of the candidate greatest vector (first stage), and when the
resulting vector misses some "absorbing" rows (balanced or ghost right-hand
sides), cover those with per-kind check sets over the unused columns (second
stage).  Only the residual-row test and the check sets differ per kind.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .covers import CoverProblem, all_minimal_covers
from .linalg import Vector, mat_vec
from .preprocess import SystemInstance, require_reduced
from .tropical import greatest_solution_moduli, support_moduli


@dataclass(frozen=True)
class Shadow:
    """The tropical system ``|A| z = |b|``: greatest solution and its support sets."""

    A_mags: list
    b_mags: tuple
    xbar: list
    support: list


def shadow(sys: SystemInstance) -> Shadow:
    require_reduced(sys)
    A_mags = [[e.magnitude for e in sys.A.row(i)] for i in range(sys.m)]
    b_mags = sys.b.moduli()
    xbar = greatest_solution_moduli(A_mags, b_mags, sys.n)
    return Shadow(A_mags, b_mags, xbar, support_moduli(A_mags, b_mags, xbar, sys.n))


@dataclass
class CoverBranch:
    """One first-stage cover and what happened to it."""

    primary: frozenset
    satisfied: bool
    residual_rows: frozenset = frozenset()
    check_sets: dict = field(default_factory=dict)
    extensions: list = field(default_factory=list)


@dataclass(frozen=True)
class Candidate:
    vector: Vector
    primary: frozenset
    extension: frozenset
    is_solution: bool


CheckSets = Callable[[frozenset, Vector, Vector, frozenset], dict]


def iter_candidates(
    sys: SystemInstance,
    xs: Vector,
    residual_test: Callable,
    check_sets: CheckSets,
    branches: list | None = None,
) -> Iterator[Candidate]:
    """Yield every first- and second-stage candidate vector, verified against the system.

    ``residual_test(b_i)`` selects rows the second stage may repair;
    ``check_sets(K1, d, lhs, M)`` returns ``{j: rows of M column j repairs}``
    for columns outside ``K1``.
    """
    n = sys.n
    zero = sys.kind.scalar_class.zero()
    xs_support = support_moduli(
        [[e.magnitude for e in sys.A.row(i)] for i in range(sys.m)],
        sys.b.moduli(), xs.moduli(), n,
    )
    for K1 in all_minimal_covers(CoverProblem(sys.m, xs_support)):
        d = Vector(sys.kind, tuple(xs[j] if j in K1 else zero for j in range(n)))
        lhs = mat_vec(sys.A, d)
        if lhs == sys.b:
            if branches is not None:
                branches.append(CoverBranch(K1, True))
            yield Candidate(d, K1, frozenset(), True)
            continue
        M = frozenset(i for i in range(sys.m) if residual_test(sys.b[i]) and lhs[i] != sys.b[i])
        sets = check_sets(K1, d, lhs, M)
        branch = CoverBranch(K1, False, M, sets)
        if branches is not None:
            branches.append(branch)
        columns = sorted(sets)
        problem = CoverProblem.over(M, [sets[j] for j in columns])
        for local in all_minimal_covers(problem):
            K2 = frozenset(columns[k] for k in local)
            branch.extensions.append(K2)
            ext = Vector(sys.kind, tuple(xs[j] if j in K1 or j in K2 else zero for j in range(n)))
            yield Candidate(ext, K1, K2, sys.is_solution(ext))


def single_removal_minimal(sys: SystemInstance, d: Vector, xs_support) -> bool:
    """False when zeroing one finite component (with nonempty support) still solves."""
    zero = sys.kind.scalar_class.zero()
    for j, v in enumerate(d):
        if not v.is_zero and xs_support[j]:
            if sys.is_solution(d.replace(j, zero)):
                return False
    return True


def select_minimal(sys: SystemInstance, xs: Vector, candidates) -> tuple[list, list, list]:
    """Apply the single-removal minimality filter and modulus dedupe.

    Returns ``(solutions, traces, rejected)`` where ``rejected`` holds the
    candidates that failed verification.
    """
    xs_support = support_moduli(
        [[e.magnitude for e in sys.A.row(i)] for i in range(sys.m)],
        sys.b.moduli(), xs.moduli(), sys.n,
    )
    solutions, traces, rejected, seen = [], [], [], set()
    for c in candidates:
        if not c.is_solution:
            rejected.append(c)
            continue
        if not single_removal_minimal(sys, c.vector, xs_support):
            continue
        key = c.vector.moduli()
        if key in seen:
            continue
        seen.add(key)
        solutions.append(c.vector)
        traces.append((c.primary, c.extension))
    return solutions, traces, rejected
