"""System container, reduction to finite right-hand side, and support restriction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import EmptyAfterReduction, KindMismatch, ShapeMismatch, UnreducedSystem
from .linalg import Matrix, Vector
from .semiring import Kind


@dataclass(frozen=True)
class SystemInstance:
    """The one-sided system ``A x = b``."""

    A: Matrix
    b: Vector

    def __post_init__(self):
        if self.A.kind is not self.b.kind:
            raise KindMismatch(f"matrix is {self.A.kind.value}, rhs is {self.b.kind.value}")
        if self.A.rows != len(self.b):
            raise ShapeMismatch(f"{self.A.rows} rows but {len(self.b)} right-hand sides")

    @property
    def kind(self) -> Kind:
        return self.A.kind

    @property
    def m(self) -> int:
        return self.A.rows

    @property
    def n(self) -> int:
        return self.A.cols

    def is_solution(self, x: Vector) -> bool:
        """Exact check of ``A x == b``, stopping at the first failing row."""
        A, b = self.A, self.b
        if len(x) != A.cols:
            raise ShapeMismatch(f"vector of length {len(x)} for {A.cols} columns")
        zero = self.kind.scalar_class.zero()
        for i in range(A.rows):
            acc = zero
            for a, xj in zip(A.row(i), x.entries):
                acc = acc + a * xj
            if acc != b[i]:
                return False
        return True


@dataclass(frozen=True)
class ReductionTrace:
    """What :func:`reduce` removed, in original (0-based) indices."""

    shape: tuple[int, int]
    deleted_rows: frozenset = field(default_factory=frozenset)
    forced_zero_vars: frozenset = field(default_factory=frozenset)
    free_vars: frozenset = field(default_factory=frozenset)

    @property
    def deleted_cols(self) -> frozenset:
        return self.forced_zero_vars | self.free_vars

    @property
    def kept_rows(self) -> list[int]:
        return [i for i in range(self.shape[0]) if i not in self.deleted_rows]

    @property
    def kept_cols(self) -> list[int]:
        dropped = self.deleted_cols
        return [j for j in range(self.shape[1]) if j not in dropped]

    @property
    def is_empty(self) -> bool:
        return not (self.deleted_rows or self.deleted_cols)

    def expand(self, x: Vector) -> Vector:
        """Lift a reduced-space vector back to the original columns (zeros inserted)."""
        kept = self.kept_cols
        if len(x) != len(kept):
            raise ShapeMismatch(f"vector of length {len(x)} for {len(kept)} kept columns")
        out = [x.kind.scalar_class.zero()] * self.shape[1]
        for j, v in zip(kept, x.entries):
            out[j] = v
        return Vector(x.kind, tuple(out))

    def expand_indices(self, cols) -> frozenset:
        kept = self.kept_cols
        return frozenset(kept[j] for j in cols)

    def to_dict(self) -> dict:
        return {
            "shape": list(self.shape),
            "deleted_rows": sorted(self.deleted_rows),
            "deleted_cols": sorted(self.deleted_cols),
            "forced_zero_vars": sorted(self.forced_zero_vars),
            "free_vars": sorted(self.free_vars),
        }

    @classmethod
    def from_dict(cls, d: dict) -> ReductionTrace:
        trace = cls(
            tuple(d["shape"]),
            frozenset(d["deleted_rows"]),
            frozenset(d["forced_zero_vars"]),
            frozenset(d["free_vars"]),
        )
        if sorted(trace.deleted_cols) != sorted(d.get("deleted_cols", trace.deleted_cols)):
            raise ValueError("deleted_cols disagrees with forced_zero_vars | free_vars")
        return trace


def identity_trace(sys: SystemInstance) -> ReductionTrace:
    return ReductionTrace((sys.m, sys.n))


def submatrix(A: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    entries = tuple(A[i, j] for i in rows for j in cols)
    return Matrix(A.kind, len(rows), len(cols), entries)


def reduce(sys: SystemInstance) -> tuple[SystemInstance, ReductionTrace]:
    """Drop zero right-hand sides and the variables they force to zero.

    A zero ``b_i`` forces ``x_j = 0`` for every ``j`` with ``A_ij`` nonzero, so
    row ``i`` and those columns go.  Columns with no nonzero entry left are
    unconstrained and go as well.  A single pass is a fixpoint: deleting
    columns never creates a new zero in ``b``.
    """
    A, b = sys.A, sys.b
    zero_rows = {i for i in range(sys.m) if b[i].is_zero}
    forced = {j for j in range(sys.n) if any(not A[i, j].is_zero for i in zero_rows)}
    free = {
        j for j in range(sys.n)
        if j not in forced and all(A[i, j].is_zero for i in range(sys.m))
    }
    trace = ReductionTrace((sys.m, sys.n), frozenset(zero_rows), frozenset(forced), frozenset(free))
    rows, cols = trace.kept_rows, trace.kept_cols
    if not rows:
        raise EmptyAfterReduction(trace)
    reduced = SystemInstance(
        submatrix(A, rows, cols),
        Vector(b.kind, tuple(b[i] for i in rows)),
    )
    return reduced, trace


def is_reduced(sys: SystemInstance) -> bool:
    if any(e.is_zero for e in sys.b):
        return False
    return all(any(not e.is_zero for e in sys.A.col(j)) for j in range(sys.n))


def require_reduced(sys: SystemInstance) -> None:
    if not is_reduced(sys):
        raise UnreducedSystem(
            "system has a zero right-hand side or an all-zero column; run reduce() first"
        )


def restrict_support(sys: SystemInstance, supports: Sequence[frozenset]) -> Matrix:
    """``A'``: keep ``A_ij`` only when row ``i`` is in the support set of column ``j``."""
    A = sys.A
    if len(supports) != A.cols:
        raise ShapeMismatch(f"{len(supports)} support sets for {A.cols} columns")
    zero = A.kind.scalar_class.zero()
    entries = tuple(
        A[i, j] if i in supports[j] else zero
        for i in range(A.rows) for j in range(A.cols)
    )
    return Matrix(A.kind, A.rows, A.cols, entries)
