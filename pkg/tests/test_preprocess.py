import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropsolve.errors import EmptyAfterReduction, ShapeMismatch, UnreducedSystem
from tropsolve.linalg import modulus
from tropsolve.preprocess import (
    ReductionTrace,
    SystemInstance,
    is_reduced,
    reduce,
    require_reduced,
    restrict_support,
)
from tropsolve.report import solve_system
from tropsolve.textio import matrix, system, vector
from tropsolve.tropical import greatest_solution, support_sets

from cases import SYM_SOLVABILITY
from strategies import KINDS, systems


def test_zero_rhs_forces_variable():
    sys = system("trop", "0 z / z 1", "z 3")
    reduced, trace = reduce(sys)
    assert trace.deleted_rows == {0}
    assert trace.forced_zero_vars == {0}
    assert trace.free_vars == frozenset()
    assert reduced == system("trop", "1", "3")
    assert trace.expand(vector("trop", "2")) == vector("trop", "z 2")


def test_finite_system_untouched():
    sys = system("sym", "1 2 / n:3 b:4", "5 6")
    reduced, trace = reduce(sys)
    assert reduced == sys
    assert trace.is_empty


def test_all_zero_column_is_free():
    sys = system("sup", "1 z 2 / 3 z g:4", "5 6")
    reduced, trace = reduce(sys)
    assert trace.free_vars == {1}
    assert trace.forced_zero_vars == frozenset()
    assert reduced == system("sup", "1 2 / 3 g:4", "5 6")
    assert trace.expand_indices({0, 1}) == {0, 2}


def test_empty_after_reduction_carries_trace():
    with pytest.raises(EmptyAfterReduction) as info:
        reduce(system("trop", "1 z", "z"))
    assert info.value.trace.deleted_rows == {0}
    assert info.value.trace.forced_zero_vars == {0}
    assert info.value.trace.free_vars == {1}


def test_require_reduced():
    with pytest.raises(UnreducedSystem):
        require_reduced(system("trop", "1 z", "3"))
    assert is_reduced(system("trop", "1 2", "3"))


def test_is_solution_checks_length():
    with pytest.raises(ShapeMismatch):
        SYM_SOLVABILITY.is_solution(vector("sym", "1 2"))


def test_trace_round_trip():
    trace = ReductionTrace((4, 5), frozenset({1}), frozenset({0, 3}), frozenset({4}))
    assert ReductionTrace.from_dict(trace.to_dict()) == trace
    assert trace.kept_rows == [0, 2, 3] and trace.kept_cols == [1, 2]


def test_restrict_support_examples():
    sys = SYM_SOLVABILITY
    assert restrict_support(sys, [frozenset(range(3))] * 3) == sys.A
    A1 = restrict_support(sys, [frozenset()] * 3)
    assert all(e.is_zero for e in A1.entries)
    z = greatest_solution(modulus(sys.A), modulus(sys.b))
    S = support_sets(modulus(sys.A), modulus(sys.b), z)
    assert S[0] == {2}
    A2 = restrict_support(sys, S)
    assert [str(e) for e in A2.col(0)] == ["𝟎", "𝟎", "2"]


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_reduce_idempotent(kind, data):
    sys = data.draw(systems(kind, zero=True))
    try:
        once, _ = reduce(sys)
    except EmptyAfterReduction:
        return
    twice, trace = reduce(once)
    assert twice == once and trace.is_empty


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_reduced_output_shape(kind, data):
    sys = data.draw(systems(kind))
    try:
        reduced, trace = reduce(sys)
    except EmptyAfterReduction:
        return
    assert is_reduced(reduced)
    assert (reduced.m, reduced.n) == (len(trace.kept_rows), len(trace.kept_cols))
    assert not (trace.forced_zero_vars & trace.free_vars)


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_support_restriction_keeps_verdict(kind, data):
    sys = data.draw(systems(kind, max_m=3, max_n=3, lo=-3, hi=3))
    try:
        reduced, _ = reduce(sys)
    except EmptyAfterReduction:
        return
    z = greatest_solution(modulus(reduced.A), modulus(reduced.b))
    S = support_sets(modulus(reduced.A), modulus(reduced.b), z)
    restricted = SystemInstance(restrict_support(reduced, S), reduced.b)
    assert solve_system(restricted).solvable == solve_system(reduced).solvable
