"""Enumeration of inclusion-minimal set covers (hypergraph transversals)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import NotACover


@dataclass(frozen=True)
class CoverProblem:
    """Cover ``{0, ..., universe_size - 1}`` with the indexed ``subsets``."""

    universe_size: int
    subsets: tuple

    def __post_init__(self):
        object.__setattr__(self, "subsets", tuple(frozenset(s) for s in self.subsets))
        for j, s in enumerate(self.subsets):
            if any(not 0 <= e < self.universe_size for e in s):
                raise ValueError(f"subset {j} leaves the universe [0, {self.universe_size})")

    @classmethod
    def over(cls, elements: Iterable[int], subsets: Sequence[Iterable[int]]) -> CoverProblem:
        """Problem on an arbitrary finite element set, relabelled to ``0..k-1``.

        Subsets are intersected with ``elements``; subset indices are kept.
        """
        label = {e: k for k, e in enumerate(sorted(set(elements)))}
        return cls(len(label), tuple(frozenset(label[e] for e in s if e in label) for s in subsets))

    def covers(self, K: Iterable[int]) -> bool:
        covered = set()
        for j in K:
            covered |= self.subsets[j]
        return len(covered) == self.universe_size

    def is_minimal_cover(self, K: Iterable[int]) -> bool:
        K = frozenset(K)
        return self.covers(K) and all(not self.covers(K - {j}) for j in K)


def cover_key(K) -> tuple:
    """Canonical order: by cardinality, then lexicographically."""
    return len(K), tuple(sorted(K))


def _search(p: CoverProblem) -> Iterator[frozenset]:
    # Branch on the lowest uncovered element over the subsets containing it.
    # A chosen subset that loses every private element can never become
    # necessary again, so that branch is pruned.
    containing = [[] for _ in range(p.universe_size)]
    for j, s in enumerate(p.subsets):
        for e in s:
            containing[e].append(j)

    def privately_needed(chosen):
        for j in chosen:
            others = set()
            for k in chosen:
                if k != j:
                    others |= p.subsets[k]
            if p.subsets[j] <= others:
                return False
        return True

    def rec(chosen, covered):
        if len(covered) == p.universe_size:
            yield frozenset(chosen)
            return
        e = min(x for x in range(p.universe_size) if x not in covered)
        for j in containing[e]:
            nxt = chosen + [j]
            if privately_needed(nxt):
                yield from rec(nxt, covered | p.subsets[j])

    yield from rec([], frozenset())


def iter_minimal_covers(p: CoverProblem) -> Iterator[frozenset]:
    """Lazily yield minimal covers (search order, duplicates suppressed)."""
    seen = set()
    for K in _search(p):
        if K not in seen and p.is_minimal_cover(K):
            seen.add(K)
            yield K


def all_minimal_covers(p: CoverProblem) -> list[frozenset]:
    """Every inclusion-minimal cover, sorted by :func:`cover_key`.  Empty iff none exists."""
    return sorted(iter_minimal_covers(p), key=cover_key)


def extend_to_minimal(p: CoverProblem, K: Iterable[int]) -> frozenset:
    """Prune a cover to a minimal sub-cover, dropping redundant indices in increasing order."""
    K = set(K)
    if not p.covers(K):
        raise NotACover(f"{sorted(K)} does not cover the universe")
    for j in sorted(K):
        if p.covers(K - {j}):
            K.discard(j)
    return frozenset(K)
