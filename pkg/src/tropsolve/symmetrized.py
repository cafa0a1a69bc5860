"""One-sided systems over the symmetrized semiring (signs and balances)."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from ._layered import iter_candidates, select_minimal, shadow
from .covers import CoverProblem, all_minimal_covers
from .errors import KindMismatch, RightHandSideNotSigned
from .linalg import Vector
from .preprocess import SystemInstance
from .semiring import Kind, SymLayer, SymScalar, is_balanced, is_signed, opposite, sign


@dataclass
class SymSolveReport:
    xbar_sym: Vector
    solvable: bool
    minimal_solutions: list = field(default_factory=list)
    trace: list = field(default_factory=list)
    branches: list = field(default_factory=list)
    # Candidates that failed verification.  Expected to stay empty.
    violations: list = field(default_factory=list)


def _require_sym(sys: SystemInstance):
    if sys.kind is not Kind.SYM:
        raise KindMismatch(f"symmetrized solver got a {sys.kind.value} system")


def _signed_support(sys, sh):
    signed = {i for i in range(sys.m) if is_signed(sys.b[i])}
    return [sorted(s & signed) for s in sh.support]


def greatest_modulus_candidate(sys: SystemInstance) -> Vector:
    """Candidate greatest-modulus solution; a solution iff the system is solvable.

    For each column, look at the signed equations it attains at full modulus:
    if all of them agree with the sign of the column entries the component is
    ``xbar_j``, if all disagree it is ``-xbar_j``, a mixture (or a balanced
    entry) drops it to ``xbar_j - 1``, and with no signed equation it is the
    balanced ``xbar_j``.
    """
    _require_sym(sys)
    sh = shadow(sys)
    out = []
    for j, rows in enumerate(_signed_support(sys, sh)):
        x = sh.xbar[j]
        if not rows:
            out.append(SymScalar.balanced(x))
            continue
        entries = [(sys.A[i, j], sys.b[i]) for i in rows]
        if all(is_signed(a) for a, _ in entries):
            if all(sign(bi) is sign(a) for a, bi in entries):
                out.append(SymScalar.plus(x))
                continue
            if all(sign(bi) is opposite(sign(a)) for a, bi in entries):
                out.append(SymScalar.minus(x))
                continue
        # Never attains any |b_i|, so the layer is immaterial; PLUS for determinism.
        out.append(SymScalar.plus(x - 1))
    return Vector(Kind.SYM, tuple(out))


def is_solvable(sys: SystemInstance) -> bool:
    return sys.is_solution(greatest_modulus_candidate(sys))


def _check_sets(sys: SystemInstance, xs: Vector, has_signed_support: list):
    A, b = sys.A, sys.b

    def check_sets(K1, d, lhs, M):
        out = {}
        for j in range(sys.n):
            if j in K1:
                continue
            rows = set()
            for i in M:
                a = A[i, j]
                if xs[j].magnitude + a.magnitude != b[i].magnitude:
                    continue
                if not has_signed_support[j] or is_balanced(a):
                    rows.add(i)
                elif is_signed(a) and is_signed(lhs[i]):
                    wanted = SymScalar(opposite(sign(lhs[i])), b[i].magnitude)
                    if xs[j] * a == wanted:
                        rows.add(i)
            out[j] = frozenset(rows)
        return out

    return check_sets


def minimal_modulus_solutions(sys: SystemInstance) -> SymSolveReport:
    """All minimal-modulus solutions, one representative per modulus vector.

    First-stage covers of all rows by the supports of the greatest candidate;
    balanced equations left unsatisfied are repaired by a second-stage cover
    using columns that contribute either a balanced term or a term of the
    opposite sign to the first-stage partial sum.
    """
    xs = greatest_modulus_candidate(sys)
    report = SymSolveReport(xs, sys.is_solution(xs))
    if not report.solvable:
        return report
    has_signed = [bool(rows) for rows in _signed_support(sys, shadow(sys))]
    candidates = iter_candidates(sys, xs, is_balanced, _check_sets(sys, xs, has_signed),
                                 report.branches)
    sols, traces, rejected = select_minimal(sys, xs, candidates)
    report.minimal_solutions = sols
    report.trace = traces
    report.violations = [c.vector for c in rejected]
    return report


def signed_rhs_witness(sys: SystemInstance) -> Vector | None:
    """For an all-signed right-hand side: a solution whose modulus is a minimal
    solution of the tropical shadow, found by trying every sign pattern on
    every minimal cover.  ``None`` means the system is unsolvable.
    """
    _require_sym(sys)
    if not all(is_signed(bi) for bi in sys.b):
        raise RightHandSideNotSigned("every right-hand side entry must be signed")
    sh = shadow(sys)
    if len(frozenset().union(*sh.support)) != sys.m:
        return None
    zero = SymScalar.zero()
    for K in all_minimal_covers(CoverProblem(sys.m, sh.support)):
        cols = sorted(K)
        for signs in product((SymLayer.PLUS, SymLayer.MINUS), repeat=len(cols)):
            entries = [zero] * sys.n
            for j, s in zip(cols, signs):
                entries[j] = SymScalar(s, sh.xbar[j])
            x = Vector(Kind.SYM, tuple(entries))
            if sys.is_solution(x):
                return x
    return None


def signed_rhs_shortcut(sys: SystemInstance) -> bool:
    return signed_rhs_witness(sys) is not None
