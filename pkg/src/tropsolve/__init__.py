"""Exact solvers for one-sided linear systems ``A x = b`` over the tropical
semiring and its symmetrized and supertropical layered extensions.
"""

from .errors import (
    BalancedOrZeroHasNoSign,
    EmptyAfterReduction,
    GridTooLarge,
    KindMismatch,
    MagnitudeOverflow,
    NotACover,
    NotSquare,
    ParseError,
    RightHandSideNotSigned,
    ShapeMismatch,
    TropsolveError,
    UnreducedSystem,
)
from .linalg import Matrix, Vector, mat_mul, mat_vec
from .preprocess import ReductionTrace, SystemInstance, reduce
from .report import SolveReportDocument, solve_system
from .semiring import NEG_INF, Kind, SupScalar, SymScalar, TropScalar, parse_token
from .textio import matrix, parse_system, serialize_system, system, vector

__all__ = [
    "BalancedOrZeroHasNoSign", "EmptyAfterReduction", "GridTooLarge", "KindMismatch",
    "MagnitudeOverflow", "NotACover", "NotSquare", "ParseError", "RightHandSideNotSigned",
    "ShapeMismatch", "TropsolveError", "UnreducedSystem",
    "Matrix", "Vector", "mat_mul", "mat_vec",
    "ReductionTrace", "SystemInstance", "reduce",
    "SolveReportDocument", "solve_system",
    "NEG_INF", "Kind", "SupScalar", "SymScalar", "TropScalar", "parse_token",
    "matrix", "parse_system", "serialize_system", "system", "vector",
]
