from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropsolve.covers import CoverProblem, all_minimal_covers, cover_key, extend_to_minimal
from tropsolve.errors import NotACover


def brute_force(p: CoverProblem) -> set:
    """Minimal covers straight from the definition, over the whole powerset."""
    n = len(p.subsets)
    covers = [frozenset(K) for r in range(n + 1) for K in combinations(range(n), r)
              if p.covers(K)]
    return {K for K in covers if not any(L < K for L in covers)}


FIVE_BY_FOUR = CoverProblem(5, [{0, 1, 4}, {0, 1, 4}, {2}, {0, 1, 3, 4}])


def test_unique_cover():
    assert all_minimal_covers(FIVE_BY_FOUR) == [{2, 3}]


def test_two_covers():
    p = CoverProblem(3, [{0, 1}, {0, 2}, {0, 2}])
    assert all_minimal_covers(p) == [{0, 1}, {0, 2}]


def test_full_subset_is_a_cover():
    p = CoverProblem(3, [{0}, {0, 1, 2}, {1, 2}])
    covers = all_minimal_covers(p)
    assert {1} in covers
    assert set(covers) == brute_force(p)


def test_no_cover_and_empty_universe():
    assert all_minimal_covers(CoverProblem(3, [{0}, {1}])) == []
    assert all_minimal_covers(CoverProblem(0, [set(), {0} - {0}])) == [frozenset()]


def test_subset_outside_universe():
    with pytest.raises(ValueError):
        CoverProblem(2, [{0, 2}])


def test_over_relabels():
    p = CoverProblem.over({3, 7}, [{1, 3}, {7, 8}, {3, 7}])
    assert p.universe_size == 2
    assert all_minimal_covers(p) == [{2}, {0, 1}]


def test_extend_to_minimal():
    assert extend_to_minimal(FIVE_BY_FOUR, range(4)) == {2, 3}
    assert extend_to_minimal(FIVE_BY_FOUR, {2, 3}) == {2, 3}
    assert extend_to_minimal(FIVE_BY_FOUR, {1, 2, 3}) == {2, 3}
    with pytest.raises(NotACover):
        extend_to_minimal(FIVE_BY_FOUR, {0, 1})


@st.composite
def cover_problems(draw, max_m=10, max_n=10):
    m = draw(st.integers(0, max_m))
    n = draw(st.integers(0, max_n))
    elems = st.frozensets(st.integers(0, m - 1), max_size=m) if m else st.just(frozenset())
    return CoverProblem(m, draw(st.lists(elems, min_size=n, max_size=n)))


@given(cover_problems())
def test_matches_powerset(p):
    got = all_minimal_covers(p)
    assert len(got) == len(set(got))
    assert set(got) == brute_force(p)
    assert got == sorted(got, key=cover_key)
    for K in got:
        assert p.is_minimal_cover(K)


@given(cover_problems(max_m=8, max_n=8), st.data())
def test_extend_lands_on_enumerated_cover(p, data):
    covers = all_minimal_covers(p)
    if not covers:
        return
    base = data.draw(st.sampled_from(covers))
    extra = data.draw(st.frozensets(st.integers(0, len(p.subsets) - 1))) if p.subsets else frozenset()
    K = base | extra
    out = extend_to_minimal(p, K)
    assert out <= K
    assert out in covers
