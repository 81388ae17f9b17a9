"""
Symmetric CSDs built from partitions of the triple set into tilings.

A sequence ``j_1, ..., j_{n-2}`` listing ``[2..n-1]`` splits the triples into
``n-2`` tilings ``T_j``.  Every union of parts is a tiling, so the ``2^(n-2)``
unions form a Boolean, self-opposite CSD.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .csd import SuperDomain
from .lambda_core import InversionSet, lambda_space
from .tiling import Tiling, enumerate_all

__all__ = [
    "straddle_part", "symmetric_partition", "LambdaPartition", "boolean_csd",
    "parse_sequence", "max_partition_size",
]


def parse_sequence(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise ValueError(f"malformed sequence {text!r}") from None


def straddle_part(j: int, p: int, q: int, n: int) -> Tiling:
    """Triples ``abc`` inside ``[p..q]`` with ``a < j < c``.

    >>> str(straddle_part(3, 1, 4, 4))
    '0111'
    """
    if not 1 <= p < j < q <= n:
        raise ValueError(f"need 1 <= p < j < q <= n, got p={p}, j={j}, q={q}, n={n}")
    index = lambda_space(n).index
    bits = 0
    for t in combinations(range(p, q + 1), 3):
        if t[0] < j < t[2]:
            bits |= 1 << index[t]
    return Tiling(n, bits)


class LambdaPartition:
    """Parts ``T_j`` keyed by ``j``; disjoint tilings covering every triple."""

    def __init__(self, n: int, parts: Mapping[int, InversionSet]):
        self.n = n
        self.parts: dict[int, Tiling] = {j: Tiling.of(parts[j]) for j in sorted(parts)}
        full = lambda_space(n).full
        seen = 0
        for j, T in self.parts.items():
            if T.n != n:
                raise ValueError(f"part {j} lives on {T.n} colors, expected {n}")
            if seen & T.bits:
                raise ValueError(f"part {j} overlaps an earlier part")
            seen |= T.bits
        if seen != full:
            raise ValueError("parts do not cover every triple")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaPartition):
            return NotImplemented
        return self.n == other.n and self.parts == other.parts

    def __hash__(self) -> int:
        return hash((self.n, tuple((j, T.bits) for j, T in self.parts.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{j}: {T.to_triple_list()}" for j, T in self.parts.items())
        return f"LambdaPartition(n={self.n}, {{{body}}})"

    def to_text(self) -> str:
        return "".join(f"{j}: {T.to_triple_list()}\n" for j, T in self.parts.items())

    def union(self, keys: Iterable[int]) -> Tiling:
        bits = 0
        for j in keys:
            bits |= self.parts[j].bits
        return Tiling(self.n, bits)


def symmetric_partition(seq: Sequence[int], n: int | None = None) -> LambdaPartition:
    """Split the triples of ``[n]`` following the order in ``seq``.

    Each ``j`` takes the triples of the current block ``[p..q]`` around it that
    straddle ``j``; the block's inner colors are then split at ``j``.
    """
    seq = tuple(seq)
    if n is None:
        n = len(seq) + 2
    if sorted(seq) != list(range(2, n)):
        raise ValueError(f"{seq!r} is not an ordering of [2..{n - 1}]")
    active = [(2, n - 1)] if n >= 3 else []
    parts = {}
    for j in seq:
        lo, hi = next(iv for iv in active if iv[0] <= j <= iv[1])
        parts[j] = straddle_part(j, lo - 1, hi + 1, n)
        active.remove((lo, hi))
        if lo <= j - 1:
            active.append((lo, j - 1))
        if j + 1 <= hi:
            active.append((j + 1, hi))
    return LambdaPartition(n, parts)


def boolean_csd(P: LambdaPartition) -> SuperDomain:
    """All unions of parts, ``2^m`` tilings when the ``m`` parts are nonempty."""
    keys = list(P.parts)
    members = [P.union(S) for k in range(len(keys) + 1) for S in combinations(keys, k)]
    return SuperDomain(P.n, members)


def max_partition_size(n: int) -> int:
    """Largest number of nonempty tilings partitioning the triple set (exhaustive)."""
    tilings = [T.bits for T in enumerate_all(n) if T.bits]
    full = lambda_space(n).full
    best = 0

    def search(covered: int, count: int) -> None:
        nonlocal best
        if covered == full:
            best = max(best, count)
            return
        # the lowest uncovered triple must be in the next part
        low = (~covered & full) & -(~covered & full)
        for b in tilings:
            if b & low and not b & covered:
                search(covered | b, count + 1)

    search(0, 0)
    return best
