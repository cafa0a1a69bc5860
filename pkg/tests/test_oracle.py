import pytest

from tropsolve.errors import GridTooLarge
from tropsolve.linalg import trop_vector
from tropsolve.oracle import (
    CandidateGrid,
    default_grid,
    enumerate_solutions,
    minimal_modulus_set,
    tropical_grid,
)
from tropsolve.semiring import NEG_INF, SupScalar, TropScalar
from tropsolve.textio import system, vector

from cases import SUP_3X3, SYM_COUNTEREXAMPLE
from tropsolve.preprocess import reduce


def test_default_grid_shape():
    grid = default_grid(SUP_3X3)
    # zero + {tangible, ghost} x {xbar, xbar - 1}
    assert [len(c) for c in grid.columns] == [5, 5, 5]
    assert grid.size == 125
    assert SupScalar.ghost(-4) in grid.columns[0]
    assert SupScalar.tangible(-5) in grid.columns[0]
    assert [len(c) for c in tropical_grid(system("trop", "0 1", "3")).columns] == [2, 2]


def test_grid_requires_zero():
    with pytest.raises(ValueError):
        CandidateGrid([[TropScalar.of(1)]])


def test_three_by_three_membership():
    found = enumerate_solutions(SUP_3X3)
    assert vector("sup", "g:-4 -5 z") in found
    assert vector("sup", "g:-4 z -6") in found
    assert {v.moduli() for v in minimal_modulus_set(found)} == {
        (-4, -5, NEG_INF), (-4, NEG_INF, -6)}


def test_unsolvable_is_empty():
    reduced, _ = reduce(SYM_COUNTEREXAMPLE)
    assert enumerate_solutions(reduced) == []


def test_single_equation():
    assert enumerate_solutions(system("trop", "0", "3")) == [vector("trop", "3")]


def test_minimal_modulus_set():
    xs = [vector("trop", "3"), vector("trop", "2")]
    assert minimal_modulus_set(xs) == [trop_vector([2])]
    assert minimal_modulus_set([]) == []
    # duplicates collapse
    assert minimal_modulus_set([vector("sym", "b:1"), vector("sym", "n:1")]) == [trop_vector([1])]


def test_limit():
    sys = system("sym", "0 0 0 0 0 0 0 0", "1")
    with pytest.raises(GridTooLarge):
        enumerate_solutions(sys, limit=1000)


def test_product_order_is_deterministic():
    assert enumerate_solutions(SUP_3X3) == enumerate_solutions(SUP_3X3)
