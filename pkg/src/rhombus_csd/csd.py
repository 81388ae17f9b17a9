"""
Super-domains (sets of tilings) and the Condorcet super-domain property.

A super-domain is a CSD when the triple-wise majority of any odd profile drawn
from it is again a tiling; it suffices to look at medians of three distinct
members.
"""

from __future__ import annotations

import time
from functools import cache
from itertools import combinations
from typing import Iterable

from .lambda_core import InversionSet, Verdict, _gather, lambda_space, restriction_map
from .tiling import Tiling, _first_bad_stick, enumerate_all, restrict

__all__ = [
    "SuperDomain", "compatible", "is_clique", "is_normal", "is_csd",
    "is_csd_via_quadruples", "is_closed", "is_convex", "can_extend",
    "is_maximal_csd", "maximal_csds",
]


class SuperDomain:
    """A deduplicated set of tilings of one ``n``, kept in canonical order."""

    __slots__ = ("n", "members", "_bits")

    def __init__(self, n: int, members: Iterable[InversionSet] = ()):
        seen = {}
        for T in members:
            if T.n != n:
                raise ValueError(f"member on {T.n} colors in a domain on {n}")
            seen.setdefault(T.bits, Tiling.of(T))
        self.n = n
        self.members: tuple[Tiling, ...] = tuple(sorted(seen.values(), key=Tiling.sort_key))
        self._bits = frozenset(seen)

    @classmethod
    def of(cls, members: Iterable[InversionSet]) -> SuperDomain:
        members = list(members)
        if not members:
            raise ValueError("cannot infer n from an empty domain")
        return cls(members[0].n, members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, T: InversionSet) -> bool:
        return T.n == self.n and T.bits in self._bits

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperDomain):
            return NotImplemented
        return self.n == other.n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self.n, self._bits))

    def __repr__(self) -> str:
        return f"SuperDomain(n={self.n}, [{', '.join(T.to_bitstring() for T in self.members)}])"

    def __or__(self, other: SuperDomain | Iterable[InversionSet]) -> SuperDomain:
        return SuperDomain(self.n, [*self.members, *other])

    def restrict(self, K) -> SuperDomain:
        return SuperDomain(len(K), (restrict(T, K) for T in self.members))


def _tiling_bits(n: int, bits: int) -> bool:
    return _first_bad_stick(n, bits) < 0


def compatible(T: InversionSet, Tp: InversionSet) -> bool:
    """Both the intersection and the union of the two inversion sets are tilings."""
    other = T._peer(Tp)
    return _tiling_bits(T.n, T.bits & other) and _tiling_bits(T.n, T.bits | other)


def is_clique(D: SuperDomain) -> Verdict:
    """Pairwise compatibility; the witness is the first incompatible pair."""
    for A, B in combinations(D.members, 2):
        if not compatible(A, B):
            return Verdict(False, (A, B))
    return Verdict(True)


def is_normal(D: SuperDomain) -> bool:
    """Contains both the standard and the anti-standard tiling."""
    return 0 in D._bits and lambda_space(D.n).full in D._bits


def _median_bits(a: int, b: int, c: int) -> int:
    return (a & b) | (b & c) | (c & a)


def is_csd(D: SuperDomain) -> Verdict:
    """Median of every three distinct members passes Ziegler.

    The witness is ``(T1, T2, T3, median)`` for the first failing triple in
    canonical member order.
    """
    n, members = D.n, D.members
    for A, B, C in combinations(members, 3):
        m = _median_bits(A.bits, B.bits, C.bits)
        if not _tiling_bits(n, m):
            return Verdict(False, (A, B, C, InversionSet(n, m)))
    return Verdict(True)


@cache
def _csd4(bits_set: frozenset[int]) -> bool:
    # n=4 domains, memoized: there are only 2^8 of them
    return all(_tiling_bits(4, _median_bits(a, b, c))
               for a, b, c in combinations(sorted(bits_set), 3))


def is_csd_via_quadruples(D: SuperDomain) -> Verdict:
    """Every restriction of ``D`` to four colors is a CSD; the witness is the quadruple."""
    for F in combinations(range(1, D.n + 1), 4):
        ranks = restriction_map(F, D.n)
        if not _csd4(frozenset(_gather(T.bits, ranks) for T in D.members)):
            return Verdict(False, F)
    return Verdict(True)


def is_closed(D: SuperDomain) -> Verdict:
    """The median of every three members is a member; witness ``(T1, T2, T3, median)``."""
    for A, B, C in combinations(D.members, 3):
        m = _median_bits(A.bits, B.bits, C.bits)
        if m not in D._bits:
            return Verdict(False, (A, B, C, InversionSet(D.n, m)))
    return Verdict(True)


def is_convex(D: SuperDomain) -> Verdict:
    """Every tiling lying between two members is a member; witness ``(T1, T2, R)``."""
    tilings = enumerate_all(D.n)
    for A, B in combinations(D.members, 2):
        lo, hi = A.bits & B.bits, A.bits | B.bits
        for R in tilings:
            if R.bits & lo == lo and R.bits | hi == hi and R.bits not in D._bits:
                return Verdict(False, (A, B, R))
    return Verdict(True)


def can_extend(D: SuperDomain, T: InversionSet) -> bool:
    """Whether ``D ∪ {T}`` is a CSD, assuming ``D`` already is one."""
    n, t = D.n, T.bits
    return all(_tiling_bits(n, _median_bits(t, A.bits, B.bits))
               for A, B in combinations(D.members, 2))


def is_maximal_csd(D: SuperDomain, budget: float | None = None) -> Verdict:
    """``D`` is a CSD and no other tiling can join it.

    The witness is an addable tiling, or the failing median triple when ``D``
    is not a CSD at all.  With ``budget`` seconds the search may stop early and
    report ``holds=None``.
    """
    start = time.monotonic()
    base = is_csd(D)
    if not base:
        return Verdict(False, base.witness)
    for T in enumerate_all(D.n):
        if budget is not None and time.monotonic() - start >= budget:
            return Verdict(None)
        if T in D:
            continue
        if can_extend(D, T):
            return Verdict(False, T)
    return Verdict(True)


def maximal_csds(n: int) -> list[SuperDomain]:
    """All maximal CSDs of Z(n;2) by exhaustive search (n <= 4 only).

    The CSD property is hereditary, so a CSD is maximal exactly when no single
    tiling can be added.
    """
    if n > 4:
        raise ValueError("exhaustive maximal-CSD search is limited to n <= 4")
    tilings = enumerate_all(n)
    found = []
    # depth-first over include/exclude decisions, pruning non-CSDs
    def extend(pos: int, chosen: list[Tiling]) -> None:
        if pos == len(tilings):
            D = SuperDomain(n, chosen)
            if all(T in D or not can_extend(D, T) for T in tilings):
                found.append(D)
            return
        T = tilings[pos]
        D = SuperDomain(n, chosen)
        if can_extend(D, T):
            extend(pos + 1, chosen + [T])
        extend(pos + 1, chosen)
    extend(0, [])
    return sorted(found, key=lambda D: (-len(D), [T.sort_key() for T in D]))
