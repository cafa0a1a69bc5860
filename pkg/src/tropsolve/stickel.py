"""Stickel key exchange over a semiring, and the linear-system attack on it.

Alice sends ``U = p1(A) W p2(B)``, Bob sends ``V = q1(A) W q2(B)``; both end up
with ``K = p1(A) V p2(B) = q1(A) U q2(B)`` because polynomials in one matrix
commute.  An eavesdropper who knows a degree bound ``D`` solves

    sum_{a,b <= D}  z_ab * (A^a W B^b)[g, d]  =  U[g, d]      for all g, d

for the ``(D+1)^2`` unknowns ``z_ab``; *any* solution gives back the key as
``sum_ab z_ab * A^a V B^b``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import supertropical, symmetrized
from .errors import EmptyAfterReduction
from .generators import random_matrix, random_scalar
from .linalg import Matrix, Vector, mat_add, mat_mul, poly_eval, powers, scale
from .preprocess import SystemInstance, reduce
from .semiring import Kind
from .tropical import greatest_solution_moduli, support_moduli

MAX_ATTACK_DEGREE = 4


@dataclass(frozen=True)
class StickelParams:
    kind: Kind
    n: int = 3
    degree: int = 2
    magnitude_range: tuple[int, int] = (-10, 10)
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.n < 1 or self.degree < 1:
            raise ValueError("need n >= 1 and degree >= 1")
        lo, hi = self.magnitude_range
        if lo > hi:
            raise ValueError("empty magnitude range")


@dataclass(frozen=True)
class Transcript:
    A: Matrix
    B: Matrix
    W: Matrix
    U: Matrix
    V: Matrix
    alice_secret: tuple  # (p1 coefficients, p2 coefficients)
    bob_secret: tuple
    key: Matrix
    bob_key: Matrix

    @property
    def keys_agree(self) -> bool:
        return self.key == self.bob_key

    def to_dict(self) -> dict:
        def mat(M):
            return [[e.token() for e in r] for r in M.to_rows()]

        def poly(p):
            return [c.token() for c in p]

        return {
            "kind": self.A.kind.value,
            "A": mat(self.A), "B": mat(self.B), "W": mat(self.W),
            "U": mat(self.U), "V": mat(self.V),
            "alice_secret": [poly(p) for p in self.alice_secret],
            "bob_secret": [poly(p) for p in self.bob_secret],
            "key": mat(self.key),
        }


def exchange(A: Matrix, B: Matrix, W: Matrix, alice, bob) -> Transcript:
    """Run the protocol with explicit secrets ``alice = (p1, p2)``, ``bob = (q1, q2)``."""
    p1, p2 = (poly_eval(c, A) if i == 0 else poly_eval(c, B) for i, c in enumerate(alice))
    q1, q2 = (poly_eval(c, A) if i == 0 else poly_eval(c, B) for i, c in enumerate(bob))
    U = mat_mul(mat_mul(p1, W), p2)
    V = mat_mul(mat_mul(q1, W), q2)
    k_alice = mat_mul(mat_mul(p1, V), p2)
    k_bob = mat_mul(mat_mul(q1, U), q2)
    return Transcript(A, B, W, U, V, tuple(map(tuple, alice)), tuple(map(tuple, bob)),
                      k_alice, k_bob)


def run_protocol(params: StickelParams) -> Transcript:
    rng = random.Random(params.seed)
    lo, hi = params.magnitude_range
    kw = dict(lo=lo, hi=hi)
    A, B, W = (random_matrix(params.kind, params.n, params.n, rng, **kw) for _ in range(3))

    def poly():
        return [random_scalar(params.kind, rng, **kw) for _ in range(params.degree + 1)]

    return exchange(A, B, W, (poly(), poly()), (poly(), poly()))


def attack_system(A: Matrix, B: Matrix, W: Matrix, U: Matrix, degree: int) -> SystemInstance:
    """Assemble the ``n^2 x (D+1)^2`` system; column ``a*(D+1)+b`` is ``A^a W B^b`` flattened."""
    pa, pb = powers(A, degree), powers(B, degree)
    cols = [mat_mul(mat_mul(pa[a], W), pb[b]).entries
            for a in range(degree + 1) for b in range(degree + 1)]
    rows = [[c[k] for c in cols] for k in range(len(U.entries))]
    return SystemInstance(Matrix.from_rows(rows, kind=A.kind), Vector(U.kind, U.entries))


def rebuild_key(A: Matrix, B: Matrix, V: Matrix, z: Vector, degree: int) -> Matrix:
    pa, pb = powers(A, degree), powers(B, degree)
    key = None
    for a in range(degree + 1):
        for b in range(degree + 1):
            term = scale(z[a * (degree + 1) + b], mat_mul(mat_mul(pa[a], V), pb[b]))
            key = term if key is None else mat_add(key, term)
    return key


def _find_solution(reduced: SystemInstance) -> Vector | None:
    if reduced.kind is Kind.TROP:
        A_mags = [[e.magnitude for e in reduced.A.row(i)] for i in range(reduced.m)]
        b_mags = reduced.b.moduli()
        xbar = greatest_solution_moduli(A_mags, b_mags, reduced.n)
        support = support_moduli(A_mags, b_mags, xbar, reduced.n)
        if len(frozenset().union(*support)) != reduced.m:
            return None
        cls = Kind.TROP.scalar_class
        return Vector(Kind.TROP, tuple(cls.of(v) for v in xbar))
    if reduced.kind is Kind.SYM:
        xs = symmetrized.greatest_modulus_candidate(reduced)
        return xs if reduced.is_solution(xs) else None
    xs = supertropical.greatest_modulus_solution(reduced)
    if xs is not None:
        return xs
    return next(supertropical.iter_solutions(reduced), None)


def attack(A: Matrix, B: Matrix, W: Matrix, U: Matrix, V: Matrix, degree: int) -> Matrix | None:
    """Recover the shared key from public data, or ``None`` when no solution turns up."""
    if not 0 <= degree <= MAX_ATTACK_DEGREE:
        raise ValueError(f"attack degree capped at {MAX_ATTACK_DEGREE}")
    sys = attack_system(A, B, W, U, degree)
    try:
        reduced, trace = reduce(sys)
    except EmptyAfterReduction:
        # U is all zero: the zero combination already reproduces it.
        z = Vector.zeros(sys.kind, sys.n)
    else:
        z_red = _find_solution(reduced)
        if z_red is None:
            return None
        z = trace.expand(z_red)
    return rebuild_key(A, B, V, z, degree)
