"""Strict-partition indexing for the antisymmetrized monomial basis.

Basis vectors of the antisymmetric model are indexed by strictly
decreasing integer d-tuples ("strict partitions", negative entries
allowed).  A tuple with a repeated entry indexes the zero vector; the
analytic subspace is spanned by tuples whose last entry is >= 0.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional

from .errors import DomainError


class Partition(tuple):
    """Strictly decreasing integer tuple, validated at construction."""

    def __new__(cls, entries: Iterable[int]):
        t = tuple.__new__(cls, entries)
        for i in range(len(t) - 1):
            if t[i] <= t[i + 1]:
                raise DomainError(f"not strictly decreasing: {tuple(t)}")
        if len(t) < 2:
            raise DomainError("partition needs d >= 2 entries")
        return t

    @classmethod
    def _unsafe(cls, entries) -> "Partition":
        # internal fast path: caller guarantees strict decrease
        return tuple.__new__(cls, entries)

    @property
    def d(self) -> int:
        return len(self)

    @property
    def is_analytic(self) -> bool:
        return self[-1] >= 0


class SignedPartition(NamedTuple):
    sign: int
    partition: Optional[Partition]


def antisymmetrize(t: Iterable[int]) -> SignedPartition:
    """Sort a tuple into a strict partition, tracking the permutation sign.

    Returns (0, None) when two entries coincide (the indexed vector is 0),
    else (+/-1, sorted partition).
    """
    t = tuple(t)
    n = len(t)
    inversions = 0
    for i in range(n - 1):
        ti = t[i]
        for j in range(i + 1, n):
            if ti < t[j]:
                inversions += 1
            elif ti == t[j]:
                return SignedPartition(0, None)
    srt = sorted(t, reverse=True)
    return SignedPartition(-1 if inversions & 1 else 1, Partition._unsafe(srt))


def orbit_permutations(m: Iterable[int]) -> list[tuple[int, ...]]:
    """Distinct permutations of a tuple, in descending lexicographic order."""
    return sorted(set(itertools.permutations(tuple(m))), reverse=True)


@lru_cache(maxsize=None)
def signed_index_permutations(d: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All index permutations of range(d) with their signs."""
    out = []
    for perm in itertools.permutations(range(d)):
        inv = sum(
            1
            for i in range(d - 1)
            for j in range(i + 1, d)
            if perm[i] > perm[j]
        )
        out.append((perm, -1 if inv & 1 else 1))
    return tuple(out)


def shift_diag(p: Partition, r: int) -> Partition:
    """Add r to every entry (multiplication by the r-th power of the top degree)."""
    return Partition._unsafe(tuple(x + r for x in p))


def regrade(p: Partition) -> tuple[int, Partition]:
    """Split p as (r, base) with base = p - r*(1,...,1) ending in 0."""
    r = p[-1]
    return r, shift_diag(p, -r)


class Window:
    """Finite, graded-lexicographically ordered set of strict partitions.

    Ordered by top entry, ties broken lexicographically (plain tuple
    order, since the top entry is compared first anyway).
    """

    def __init__(self, d: int, max_top: int, min_bottom: int, members: Iterable[Partition]):
        if d < 2:
            raise DomainError("windows need d >= 2")
        self.d = d
        self.max_top = max_top
        self.min_bottom = min_bottom
        self.members: tuple[Partition, ...] = tuple(sorted(members))
        self.position = {p: i for i, p in enumerate(self.members)}

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, p):
        return p in self.position

    def __eq__(self, other):
        return isinstance(other, Window) and self.members == other.members

    def __repr__(self):
        return (
            f"Window(d={self.d}, max_top={self.max_top}, "
            f"min_bottom={self.min_bottom}, size={len(self.members)})"
        )

    def analytic_part(self) -> "Window":
        return Window(self.d, self.max_top, self.min_bottom,
                      [p for p in self.members if p.is_analytic])

    def nonanalytic_part(self) -> "Window":
        return Window(self.d, self.max_top, self.min_bottom,
                      [p for p in self.members if not p.is_analytic])

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "maxTop": self.max_top,
            "minBottom": self.min_bottom,
            "members": [list(p) for p in self.members],
        }


def enumerate_window(d: int, max_top: int, min_bottom: int) -> Window:
    """All strict partitions with entries in [min_bottom, max_top].

    A range narrower than d values yields an empty window.
    """
    if d < 2:
        raise DomainError("windows need d >= 2")
    values = range(min_bottom, max_top + 1)
    members = [
        Partition._unsafe(tuple(sorted(c, reverse=True)))
        for c in itertools.combinations(values, d)
    ]
    return Window(d, max_top, min_bottom, members)


def analytic_window(d: int, max_top: int) -> Window:
    """Analytic-side window: entries in [0, max_top]."""
    return enumerate_window(d, max_top, 0)


def dual_window(d: int, max_top: int, min_bottom: int) -> Window:
    """Non-analytic members (last entry < 0) of the bounded window."""
    return enumerate_window(d, max_top, min_bottom).nonanalytic_part()
