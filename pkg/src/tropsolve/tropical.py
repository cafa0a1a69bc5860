"""One-sided systems over Z_max: greatest solution, support sets, minimal solutions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .covers import CoverProblem, all_minimal_covers
from .errors import KindMismatch, ShapeMismatch, UnreducedSystem
from .linalg import Matrix, Vector
from .semiring import NEG_INF, Kind, TropScalar


@dataclass
class TropSolveReport:
    xbar: Vector
    support: list
    solvable: bool
    minimal_solutions: list = field(default_factory=list)
    minimal_covers: list = field(default_factory=list)


def _require_trop(A: Matrix, b: Vector):
    if A.kind is not Kind.TROP or b.kind is not Kind.TROP:
        raise KindMismatch("tropical solver needs tropical A and b (use linalg.modulus)")
    if A.rows != len(b):
        raise ShapeMismatch(f"{A.rows} rows but {len(b)} right-hand sides")


def greatest_solution_moduli(A_mags: Sequence[Sequence], b_mags: Sequence, ncols: int) -> list:
    """``xbar_j = -max_i (A_ij - b_i)`` on raw magnitudes (rows of ints / NEG_INF)."""
    if any(v == NEG_INF for v in b_mags):
        raise UnreducedSystem("right-hand side has a -inf entry")
    worst = [NEG_INF] * ncols
    for row, bi in zip(A_mags, b_mags):
        for j, a in enumerate(row):
            if a != NEG_INF:
                d = a - bi
                if d > worst[j]:
                    worst[j] = d
    if any(w == NEG_INF for w in worst):
        raise UnreducedSystem("a column of A has no finite entry")
    return [-w for w in worst]


def support_moduli(A_mags, b_mags, x_mags, ncols: int) -> list[frozenset]:
    sets = [set() for _ in range(ncols)]
    for i, (row, bi) in enumerate(zip(A_mags, b_mags)):
        for j, a in enumerate(row):
            if a + x_mags[j] == bi:
                sets[j].add(i)
    return [frozenset(s) for s in sets]


def _mags(A: Matrix, b: Vector):
    return [[e.magnitude for e in A.row(i)] for i in range(A.rows)], b.moduli()


def greatest_solution(A: Matrix, b: Vector) -> Vector:
    """Componentwise greatest ``x`` with ``A x <= b``; a solution iff the system is solvable."""
    _require_trop(A, b)
    A_mags, b_mags = _mags(A, b)
    xbar = greatest_solution_moduli(A_mags, b_mags, A.cols)
    return Vector(Kind.TROP, tuple(TropScalar.of(v) for v in xbar))


def support_sets(A: Matrix, b: Vector, x: Vector) -> list[frozenset]:
    """``S_j(x)``: rows ``i`` where ``x_j * A_ij == b_i``."""
    _require_trop(A, b)
    if len(x) != A.cols:
        raise ShapeMismatch(f"vector of length {len(x)} for {A.cols} columns")
    A_mags, b_mags = _mags(A, b)
    return support_moduli(A_mags, b_mags, x.moduli(), A.cols)


def solve(A: Matrix, b: Vector) -> TropSolveReport:
    """Greatest solution plus one minimal solution per minimal cover of the rows.

    Minimal solutions keep ``xbar_j`` on the cover and ``-inf`` elsewhere; they
    are listed in lexicographic order of their covers.
    """
    xbar = greatest_solution(A, b)
    support = support_sets(A, b, xbar)
    covered = frozenset().union(*support) if support else frozenset()
    solvable = len(covered) == A.rows
    report = TropSolveReport(xbar, support, solvable)
    if not solvable:
        return report
    covers = sorted(all_minimal_covers(CoverProblem(A.rows, support)), key=lambda K: sorted(K))
    zero = TropScalar.zero()
    for K in covers:
        report.minimal_covers.append(K)
        report.minimal_solutions.append(
            Vector(Kind.TROP, tuple(xbar[j] if j in K else zero for j in range(A.cols)))
        )
    return report
