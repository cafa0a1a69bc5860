"""Seeded random scalars, matrices and systems."""

from __future__ import annotations

import random

from .errors import EmptyAfterReduction
from .linalg import Matrix, Vector, mat_vec
from .preprocess import SystemInstance, reduce
from .semiring import Kind, nonzero_layers


def random_scalar(kind, rng: random.Random, lo: int = -3, hi: int = 3, zero_prob: float = 0.0):
    """Uniform magnitude in ``[lo, hi]`` with every nonzero layer equally likely."""
    cls = Kind(kind).scalar_class
    if zero_prob and rng.random() < zero_prob:
        return cls.zero()
    return cls(rng.choice(nonzero_layers(kind)), rng.randint(lo, hi))


def random_matrix(kind, rows: int, cols: int, rng: random.Random, **kw) -> Matrix:
    return Matrix(Kind(kind), rows, cols,
                  tuple(random_scalar(kind, rng, **kw) for _ in range(rows * cols)))


def random_vector(kind, n: int, rng: random.Random, **kw) -> Vector:
    return Vector(Kind(kind), tuple(random_scalar(kind, rng, **kw) for _ in range(n)))


def random_system(kind, m: int, n: int, rng: random.Random, *, lo=-3, hi=3,
                  zero_prob=0.15, planted=None) -> SystemInstance:
    """Random ``A x = b``.  With ``planted`` (default: a coin flip) ``b`` is
    ``A x0`` for a random ``x0``, so the system is solvable before reduction.
    """
    A = random_matrix(kind, m, n, rng, lo=lo, hi=hi, zero_prob=zero_prob)
    if planted is None:
        planted = rng.random() < 0.5
    if planted:
        b = mat_vec(A, random_vector(kind, n, rng, lo=lo, hi=hi, zero_prob=zero_prob))
    else:
        b = random_vector(kind, m, rng, lo=lo, hi=hi, zero_prob=zero_prob)
    return SystemInstance(A, b)


def random_reduced_system(kind, m: int, n: int, rng: random.Random, **kw) -> SystemInstance:
    """Draw until reduction leaves a nonempty system; return the reduced system."""
    while True:
        try:
            reduced, _ = reduce(random_system(kind, m, n, rng, **kw))
        except EmptyAfterReduction:
            continue
        if reduced.n:
            return reduced
