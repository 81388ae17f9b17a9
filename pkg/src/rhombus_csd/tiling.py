"""
Rhombus tilings of the zonogon Z(n;2), handled purely through inversion sets.

A subset of triples is a tiling iff on every stick ``(ijk, ijl, ikl, jkl)``
its members form a run of 1s at the start or at the end of the stick
(the eight "bi-intervals" of n=4).
"""

from __future__ import annotations

import time
from collections import deque
from functools import cache
from itertools import combinations
from typing import Sequence

from .lambda_core import (
    InversionSet, Stick, Triple, Verdict, lambda_space, restriction_map, _gather,
)

__all__ = [
    "NotATilingError", "Tiling", "is_tiling", "standard", "anti_standard",
    "opposite", "restrict", "interval_tiling", "raising_flips", "lowering_flips",
    "flip", "enumerate_all", "FlipGraph", "flip_graph", "median3", "lies_between",
    "lattice_interval", "geodesic_interval", "dense_triple", "basis",
    "minimal_interval_gaps",
]

# 4-bit stick patterns (first member = most significant) that pass Ziegler
_PREFIX = (0b0000, 0b1000, 0b1100, 0b1110, 0b1111)
_SUFFIX = (0b0000, 0b0001, 0b0011, 0b0111, 0b1111)
_BI_INTERVALS = frozenset(_PREFIX + _SUFFIX)


class NotATilingError(ValueError):
    def __init__(self, inv: InversionSet, stick: Stick):
        super().__init__(f"{inv.to_bitstring()} violates Ziegler's criterion on stick {stick}")
        self.inv = inv
        self.stick = stick


def stick_pattern(bits: int, ranks: Sequence[int]) -> int:
    a, b, c, d = ranks
    return (bits >> a & 1) << 3 | (bits >> b & 1) << 2 | (bits >> c & 1) << 1 | (bits >> d & 1)


def _first_bad_stick(n: int, bits: int) -> int:
    """Index of the first stick violating Ziegler, or -1."""
    for s, ranks in enumerate(lambda_space(n).stick_ranks):
        if stick_pattern(bits, ranks) not in _BI_INTERVALS:
            return s
    return -1


def is_tiling(P: InversionSet) -> Verdict:
    """Ziegler's criterion; the witness is the first violating :class:`Stick`.

    >>> bool(is_tiling(InversionSet.parse("1110"))), bool(is_tiling(InversionSet.parse("0110")))
    (True, False)
    """
    s = _first_bad_stick(P.n, P.bits)
    if s < 0:
        return Verdict(True)
    return Verdict(False, lambda_space(P.n).sticks[s])


class Tiling(InversionSet):
    """An inversion set certified by Ziegler's criterion.

    Set operators on tilings return plain :class:`InversionSet` values since
    unions and intersections of tilings need not be tilings.
    """

    __slots__ = ()

    def __init__(self, n: int, bits: int = 0):
        super().__init__(n, bits)
        s = _first_bad_stick(n, bits)
        if s >= 0:
            raise NotATilingError(InversionSet(n, bits), lambda_space(n).sticks[s])

    @classmethod
    def of(cls, P: InversionSet) -> Tiling:
        if isinstance(P, Tiling):
            return P
        return cls(P.n, P.bits)

    @classmethod
    def _trusted(cls, n: int, bits: int) -> Tiling:
        # skips the Ziegler check; callers guarantee validity
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "bits", bits)
        return obj


def standard(n: int) -> Tiling:
    return Tiling(n, 0)


def anti_standard(n: int) -> Tiling:
    return Tiling(n, lambda_space(n).full)


def opposite(T: Tiling) -> Tiling:
    """Central symmetry: the complementary inversion set."""
    return Tiling._trusted(T.n, T.bits ^ lambda_space(T.n).full)


def restrict(T: InversionSet, K: Sequence[int]) -> Tiling:
    """Reduction of ``T`` to the colors in ``K`` (at least three of them)."""
    K = tuple(K)
    bits = _gather(T.bits, restriction_map(K, T.n))
    if isinstance(T, Tiling):
        return Tiling._trusted(len(K), bits)
    return Tiling(len(K), bits)


def interval_tiling(a: int, b: int, n: int) -> Tiling:
    """All triples lying inside the color interval ``[a..b]``."""
    if not 1 <= a <= b <= n:
        raise ValueError(f"interval [{a}..{b}] is not inside [1..{n}]")
    return Tiling._trusted(n, _interval_bits(a, b, n))


def _interval_bits(a: int, b: int, n: int) -> int:
    index = lambda_space(n).index
    return sum(1 << index[Triple(*c)] for c in combinations(range(a, b + 1), 3))


def dense_triple(j: int) -> Triple:
    """``ext(j) = (j-1, j, j+1)``."""
    return Triple(j - 1, j, j + 1)


def basis(T: InversionSet) -> frozenset[Triple]:
    """Dense triples present in ``T``."""
    space = lambda_space(T.n)
    return frozenset(space.triples[r] for r in space.dense_ranks if T.bits >> r & 1)


# flips ----------------------------------------------------------------------------

@cache
def _sticks_through(n: int) -> tuple[tuple[int, ...], ...]:
    space = lambda_space(n)
    through: list[list[int]] = [[] for _ in range(space.size)]
    for s, ranks in enumerate(space.stick_ranks):
        for r in ranks:
            through[r].append(s)
    return tuple(tuple(x) for x in through)


def _toggle_ok(n: int, bits: int, r: int) -> bool:
    # only sticks through the toggled triple can change status
    space = lambda_space(n)
    new = bits ^ (1 << r)
    return all(stick_pattern(new, space.stick_ranks[s]) in _BI_INTERVALS
               for s in _sticks_through(n)[r])


def _raising_ranks(n: int, bits: int) -> list[int]:
    size = lambda_space(n).size
    return [r for r in range(size) if not bits >> r & 1 and _toggle_ok(n, bits, r)]


def _lowering_ranks(n: int, bits: int) -> list[int]:
    size = lambda_space(n).size
    return [r for r in range(size) if bits >> r & 1 and _toggle_ok(n, bits, r)]


def raising_flips(T: Tiling) -> list[Triple]:
    """Triples whose addition keeps ``T`` a tiling, in lexicographic order."""
    triples = lambda_space(T.n).triples
    return [triples[r] for r in _raising_ranks(T.n, T.bits)]


def lowering_flips(T: Tiling) -> list[Triple]:
    triples = lambda_space(T.n).triples
    return [triples[r] for r in _lowering_ranks(T.n, T.bits)]


def flip(T: Tiling, t: Sequence[int]) -> Tiling:
    """Raising flip of ``T`` at triple ``t``."""
    r = lambda_space(T.n).index.get(Triple(*t))
    if r is None:
        raise ValueError(f"{t!r} is not a triple of [1..{T.n}]")
    if T.bits >> r & 1 or not _toggle_ok(T.n, T.bits, r):
        raise ValueError(f"triple {Triple(*t)} cannot be added to {T.to_bitstring()}")
    return Tiling._trusted(T.n, T.bits | 1 << r)


# enumeration -------------------------------------------------------------------

@cache
def _all_bits(n: int) -> tuple[int, ...]:
    seen = {0}
    queue = deque([0])
    while queue:
        bits = queue.popleft()
        for r in _raising_ranks(n, bits):
            nxt = bits | 1 << r
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    # canonical order: rank, then bitstring (bit 0 leftmost, so '1' there sorts later)
    size = lambda_space(n).size
    return tuple(sorted(seen, key=lambda b: (b.bit_count(), _bitstring(b, size))))


def _bitstring(bits: int, size: int) -> str:
    return "".join("1" if bits >> r & 1 else "0" for r in range(size))


def enumerate_all(n: int) -> tuple[Tiling, ...]:
    """Every tiling of Z(n;2), closed under raising flips from the standard one.

    Ordered by rank, then bitstring.  Results are cached per ``n``.
    """
    return tuple(Tiling._trusted(n, b) for b in _all_bits(n))


class FlipGraph:
    """Tilings of one ``n`` with directed raising-flip edges.

    ``edges`` holds ``(lower, upper, triple)`` with vertex indices into
    ``vertices``.
    """

    def __init__(self, n: int, vertices: tuple[Tiling, ...],
                 edges: tuple[tuple[int, int, Triple], ...]):
        self.n = n
        self.vertices = vertices
        self.edges = edges
        self._index = {T.bits: v for v, T in enumerate(vertices)}
        self._adjacency: list[list[int]] = [[] for _ in vertices]
        for a, b, _ in edges:
            self._adjacency[a].append(b)
            self._adjacency[b].append(a)

    def __repr__(self) -> str:
        return f"FlipGraph(n={self.n}, vertices={len(self.vertices)}, edges={len(self.edges)})"

    def index(self, T: InversionSet) -> int:
        return self._index[T.bits]

    def neighbors(self, v: int) -> list[int]:
        return self._adjacency[v]

    def distances_from(self, v: int) -> list[int]:
        dist = [-1] * len(self.vertices)
        dist[v] = 0
        queue = deque([v])
        adj = self._adjacency
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        return not self.vertices or min(self.distances_from(0)) >= 0

    def to_dot(self) -> str:
        lines = [f"digraph flips_n{self.n} {{", "  rankdir=BT;"]
        for T in self.vertices:
            lines.append(f'  "{T.to_bitstring()}";')
        for a, b, t in self.edges:
            lines.append(f'  "{self.vertices[a].to_bitstring()}" -> '
                         f'"{self.vertices[b].to_bitstring()}" [label="{t}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@cache
def flip_graph(n: int) -> FlipGraph:
    vertices = enumerate_all(n)
    index = {T.bits: v for v, T in enumerate(vertices)}
    triples = lambda_space(n).triples
    edges = []
    for v, T in enumerate(vertices):
        for r in _raising_ranks(n, T.bits):
            edges.append((v, index[T.bits | 1 << r], triples[r]))
    return FlipGraph(n, vertices, tuple(edges))


# medians and intervals -------------------------------------------------------------

def median3(P1: InversionSet, P2: InversionSet, P3: InversionSet) -> InversionSet:
    """Pointwise majority of three inversion sets."""
    b1, b2, b3 = P1.bits, P1._peer(P2), P1._peer(P3)
    return InversionSet(P1.n, (b1 & b2) | (b2 & b3) | (b3 & b1))


def lies_between(R: InversionSet, P: InversionSet, Q: InversionSet) -> bool:
    return (P & Q) <= R <= (P | Q)


def lattice_interval(T: Tiling, Tp: Tiling) -> list[Tiling]:
    """Tilings ``R`` with ``T ∩ T' ⊆ R ⊆ T ∪ T'`` in canonical order."""
    lo, hi = T.bits & T._peer(Tp), T.bits | Tp.bits
    return [R for R in enumerate_all(T.n) if R.bits & lo == lo and R.bits | hi == hi]


def geodesic_interval(T: Tiling, Tp: Tiling) -> list[Tiling]:
    """Tilings on some shortest path from ``T`` to ``T'`` in the undirected flip graph."""
    T._peer(Tp)
    G = flip_graph(T.n)
    a, b = G.index(T), G.index(Tp)
    da, db = G.distances_from(a), G.distances_from(b)
    d = da[b]
    return [G.vertices[v] for v in range(len(G.vertices)) if da[v] + db[v] == d]


def minimal_interval_gaps(n: int, budget: float | None = None) -> list[tuple[Tiling, Tiling]] | None:
    """Pairs whose lattice interval is just ``{T, T'}`` yet are not flip-adjacent.

    Returns ``None`` if ``budget`` seconds elapse first.
    """
    start = time.monotonic()
    tilings = enumerate_all(n)
    # canonical order is by rank, so a rank window is a contiguous slice
    first_of_rank: dict[int, int] = {}
    for pos, T in enumerate(tilings):
        first_of_rank.setdefault(T.rank, pos)
    top = lambda_space(n).size
    found = []
    for A, B in combinations(tilings, 2):
        if budget is not None and time.monotonic() - start > budget:
            return None
        if (A.bits ^ B.bits).bit_count() == 1:
            continue
        lo, hi = A.bits & B.bits, A.bits | B.bits
        window = tilings[first_of_rank[lo.bit_count()]:
                         first_of_rank.get(hi.bit_count() + 1, len(tilings))
                         if hi.bit_count() < top else len(tilings)]
        if not any(R.bits & lo == lo and R.bits | hi == hi and R.bits not in (A.bits, B.bits)
                   for R in window):
            found.append((A, B))
    return found
