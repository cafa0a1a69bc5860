"""Brute-force enumeration of solutions on a finite candidate grid.

Used to validate the solvers.  Deliberately naive: it does not look at
supports, covers or layer rules beyond plain scalar arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import GridTooLarge
from .linalg import Vector
from .preprocess import SystemInstance
from .semiring import NEG_INF, Kind, TropScalar, nonzero_layers

DEFAULT_LIMIT = 10**7


@dataclass(frozen=True)
class CandidateGrid:
    """Per-column candidate values; every column must offer the zero scalar."""

    columns: tuple

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(tuple(c) for c in self.columns))
        for j, col in enumerate(self.columns):
            if not any(v.is_zero for v in col):
                raise ValueError(f"grid column {j} lacks the zero scalar")

    @property
    def size(self) -> int:
        return math.prod(len(c) for c in self.columns)


def _xbar(sys: SystemInstance) -> list:
    # Independent recomputation of the greatest tropical solution.
    out = []
    for j in range(sys.n):
        diffs = [
            sys.A[i, j].magnitude - sys.b[i].magnitude
            for i in range(sys.m)
            if not sys.A[i, j].is_zero
        ]
        out.append(-max(diffs) if diffs else NEG_INF)
    return out


def default_grid(sys: SystemInstance, offsets: Sequence[int] = (0, 1)) -> CandidateGrid:
    """Zero plus every nonzero layer at magnitudes ``xbar_j - k`` for ``k`` in ``offsets``."""
    cls = sys.kind.scalar_class
    columns = []
    for x in _xbar(sys):
        col = [cls.zero()]
        if x != NEG_INF:
            col += [cls(layer, x - k) for layer in nonzero_layers(sys.kind) for k in offsets]
        columns.append(col)
    return CandidateGrid(columns)


def tropical_grid(sys: SystemInstance) -> CandidateGrid:
    """The ``{xbar_j, -inf}`` grid of the classical theory (tropical systems)."""
    return default_grid(sys, offsets=(0,))


def enumerate_solutions(sys: SystemInstance, grid: CandidateGrid | None = None,
                        limit: int = DEFAULT_LIMIT) -> list[Vector]:
    """All grid vectors solving the system, in ``itertools.product`` order of the grid."""
    if grid is None:
        grid = default_grid(sys)
    if len(grid.columns) != sys.n:
        raise ValueError(f"grid has {len(grid.columns)} columns, system has {sys.n}")
    if grid.size > limit:
        raise GridTooLarge(f"{grid.size} grid points exceed the limit {limit}")
    rows = [sys.A.row(i) for i in range(sys.m)]
    b = sys.b.entries
    zero = sys.kind.scalar_class.zero()
    found = []
    for xs in product(*grid.columns):
        ok = True
        for row, bi in zip(rows, b):
            acc = zero
            for a, x in zip(row, xs):
                acc = acc + a * x
            if acc != bi:
                ok = False
                break
        if ok:
            found.append(Vector(sys.kind, xs))
    return found


def _leq(u, v) -> bool:
    return all(a <= b for a, b in zip(u, v))


def minimal_modulus_set(solutions: Iterable[Vector]) -> list[Vector]:
    """Minimal modulus vectors (componentwise order), deduplicated and sorted."""
    mods = {tuple(e.magnitude for e in x) for x in solutions}
    minimal = [u for u in mods if not any(v != u and _leq(v, u) for v in mods)]
    minimal.sort()
    return [Vector(Kind.TROP, tuple(TropScalar.of(v) for v in u)) for u in minimal]
