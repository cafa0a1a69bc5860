"""Dense matrices and vectors over any of the three scalar kinds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import KindMismatch, NotSquare, ShapeMismatch
from .semiring import Kind, LayeredScalar, TropScalar, modulus as scalar_modulus

DEFAULT_MAX_POWER = 64


def _infer_kind(entries, kind):
    if kind is not None:
        return Kind(kind)
    if not entries:
        raise ValueError("cannot infer the kind of an empty array; pass kind=")
    return entries[0].kind


def _check_uniform(entries, kind):
    cls = kind.scalar_class
    for e in entries:
        if e.__class__ is not cls:
            raise KindMismatch(f"entry {e!r} is not a {kind.value} scalar")


@dataclass(frozen=True)
class Vector:
    kind: Kind
    entries: tuple

    def __post_init__(self):
        _check_uniform(self.entries, self.kind)

    @classmethod
    def of(cls, entries: Iterable[LayeredScalar], kind=None) -> Vector:
        entries = tuple(entries)
        return cls(_infer_kind(entries, kind), entries)

    @classmethod
    def zeros(cls, kind, n: int) -> Vector:
        kind = Kind(kind)
        return cls(kind, (kind.scalar_class.zero(),) * n)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, j):
        return self.entries[j]

    def moduli(self) -> tuple:
        """Raw magnitudes (ints or NEG_INF)."""
        return tuple(e.magnitude for e in self.entries)

    def replace(self, j: int, value: LayeredScalar) -> Vector:
        entries = list(self.entries)
        entries[j] = value
        return Vector(self.kind, tuple(entries))

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    def tokens(self) -> list[str]:
        return [e.token() for e in self.entries]


@dataclass(frozen=True)
class Matrix:
    """Row-major ``rows x cols`` array of scalars of one kind."""

    kind: Kind
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        _check_uniform(self.entries, self.kind)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[LayeredScalar]], kind=None, cols=None) -> Matrix:
        rows = [tuple(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeMismatch("ragged rows")
        flat = tuple(e for r in rows for e in r)
        return cls(_infer_kind(flat, kind), len(rows), cols, flat)

    @classmethod
    def zeros(cls, kind, rows: int, cols: int) -> Matrix:
        kind = Kind(kind)
        return cls(kind, rows, cols, (kind.scalar_class.zero(),) * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    def map(self, fn) -> Matrix:
        entries = tuple(fn(e) for e in self.entries)
        kind = entries[0].kind if entries else self.kind
        return Matrix(kind, self.rows, self.cols, entries)

    def __add__(self, other):
        return mat_add(self, other)

    def __matmul__(self, other):
        if isinstance(other, Vector):
            return mat_vec(self, other)
        return mat_mul(self, other)

    def __rmul__(self, alpha):
        return scale(alpha, self)

    def __str__(self):
        cells = [[str(e) for e in r] for r in self.to_rows()]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def _same_kind(a, b):
    if a.kind is not b.kind:
        raise KindMismatch(f"{a.kind.value} vs {b.kind.value}")


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    _same_kind(A, B)
    if A.shape != B.shape:
        raise ShapeMismatch(f"cannot add {A.shape} and {B.shape}")
    return Matrix(A.kind, A.rows, A.cols, tuple(a + b for a, b in zip(A.entries, B.entries)))


def _dot(xs, ys, zero):
    acc = zero
    for x, y in zip(xs, ys):
        acc = acc + x * y
    return acc


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    _same_kind(A, B)
    if A.cols != B.rows:
        raise ShapeMismatch(f"cannot multiply {A.shape} by {B.shape}")
    zero = A.kind.scalar_class.zero()
    cols_b = [B.col(j) for j in range(B.cols)]
    out = []
    for i in range(A.rows):
        r = A.row(i)
        out.extend(_dot(r, c, zero) for c in cols_b)
    return Matrix(A.kind, A.rows, B.cols, tuple(out))


def mat_vec(A: Matrix, x: Vector) -> Vector:
    _same_kind(A, x)
    if A.cols != len(x):
        raise ShapeMismatch(f"cannot multiply {A.shape} by a vector of length {len(x)}")
    zero = A.kind.scalar_class.zero()
    return Vector(A.kind, tuple(_dot(A.row(i), x.entries, zero) for i in range(A.rows)))


def scale(alpha: LayeredScalar, A: Matrix) -> Matrix:
    if alpha.kind is not A.kind:
        raise KindMismatch(f"{alpha.kind.value} scalar times {A.kind.value} matrix")
    return Matrix(A.kind, A.rows, A.cols, tuple(alpha * a for a in A.entries))


def identity(kind, n: int) -> Matrix:
    if n < 1:
        raise ValueError("identity needs n >= 1")
    cls = Kind(kind).scalar_class
    one, zero = cls.one(), cls.zero()
    return Matrix(Kind(kind), n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))


def mat_pow(A: Matrix, k: int, max_power: int = DEFAULT_MAX_POWER) -> Matrix:
    """``A`` multiplied by itself ``k`` times; ``k == 0`` gives the identity.

    Plain iterated multiplication, so an overflow surfaces at the first
    offending power.
    """
    if A.rows != A.cols:
        raise NotSquare(f"{A.shape} is not square")
    if not 0 <= k <= max_power:
        raise ValueError(f"power {k} outside [0, {max_power}]")
    result = identity(A.kind, A.rows)
    for _ in range(k):
        result = mat_mul(result, A)
    return result


def powers(A: Matrix, d: int) -> list[Matrix]:
    """``[A^0, A^1, ..., A^d]``."""
    if A.rows != A.cols:
        raise NotSquare(f"{A.shape} is not square")
    out = [identity(A.kind, A.rows)]
    for _ in range(d):
        out.append(mat_mul(out[-1], A))
    return out


def poly_eval(coeffs: Sequence[LayeredScalar], A: Matrix) -> Matrix:
    """Evaluate ``sum_k coeffs[k] * A^k``."""
    if A.rows != A.cols:
        raise NotSquare(f"{A.shape} is not square")
    if not coeffs:
        raise ValueError("polynomial needs at least one coefficient")
    result = None
    for c, P in zip(coeffs, powers(A, len(coeffs) - 1)):
        term = scale(c, P)
        result = term if result is None else mat_add(result, term)
    return result


def modulus(X):
    """Entrywise modulus of a matrix or vector, as a tropical array."""
    if isinstance(X, Matrix):
        return Matrix(Kind.TROP, X.rows, X.cols, tuple(scalar_modulus(e) for e in X.entries))
    if isinstance(X, Vector):
        return Vector(Kind.TROP, tuple(scalar_modulus(e) for e in X.entries))
    return scalar_modulus(X)


def trop_matrix(rows) -> Matrix:
    """Convenience: build a tropical matrix from ints / NEG_INF."""
    return Matrix.from_rows([[TropScalar.of(v) for v in r] for r in rows], kind=Kind.TROP,
                            cols=len(rows[0]) if rows else 0)


def trop_vector(values) -> Vector:
    return Vector.of((TropScalar.of(v) for v in values), kind=Kind.TROP)
