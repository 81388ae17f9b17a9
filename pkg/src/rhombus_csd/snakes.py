"""
Linear orders on ``[n]``, the snake domain of a tiling, and Condorcet-domain checks.

A linear order is stored as its sequence, first = least.  Its pair inversions
are the pairs ``(i, j)``, ``i < j``, with ``j`` placed before ``i``.  For a
triple ``i<j<k`` read the pairs ``(ij, ik, jk)`` in that order; an order is
compatible with a tiling ``T`` when these inversions form a terminal segment on
every triple of ``Inv(T)`` and an initial segment on every other triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .lambda_core import InversionSet, Verdict, lambda_space

__all__ = [
    "MAX_SNAKE_N", "LinearOrder", "order_inversions", "is_compatible_order",
    "sigma", "is_condorcet_domain", "parse_order",
]

MAX_SNAKE_N = 9

_INITIAL = frozenset({0b000, 0b100, 0b110, 0b111})
_TERMINAL = frozenset({0b000, 0b001, 0b011, 0b111})


def order_inversions(seq: Sequence[int]) -> frozenset[tuple[int, int]]:
    """
    >>> sorted(order_inversions((3, 4, 2, 1, 5)))
    [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]
    """
    n = len(seq)
    if sorted(seq) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(seq)!r} is not a permutation of [1..{n}]")
    pos = {c: p for p, c in enumerate(seq)}
    return frozenset((i, j) for i, j in combinations(range(1, n + 1), 2) if pos[j] < pos[i])


@dataclass(frozen=True)
class LinearOrder:
    seq: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "seq", tuple(self.seq))
        order_inversions(self.seq)

    @property
    def n(self) -> int:
        return len(self.seq)

    @cached_property
    def pair_inv(self) -> frozenset[tuple[int, int]]:
        return order_inversions(self.seq)

    @cached_property
    def position(self) -> dict[int, int]:
        return {c: p for p, c in enumerate(self.seq)}

    def reversed(self) -> LinearOrder:
        return LinearOrder(self.seq[::-1])

    def restrict(self, K: Iterable[int]) -> LinearOrder:
        """Order induced on ``K``, relabeled onto ``[|K|]`` preserving color order."""
        K = sorted(K)
        relabel = {c: p + 1 for p, c in enumerate(K)}
        return LinearOrder(tuple(relabel[c] for c in self.seq if c in relabel))

    def __str__(self) -> str:
        return ",".join(map(str, self.seq))

    @classmethod
    def identity(cls, n: int) -> LinearOrder:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reversal(cls, n: int) -> LinearOrder:
        return cls(tuple(range(n, 0, -1)))


def parse_order(text: str) -> LinearOrder:
    try:
        return LinearOrder(tuple(int(x) for x in text.replace(" ", "").split(",") if x))
    except ValueError as exc:
        raise ValueError(f"malformed linear order {text!r}: {exc}") from None


def _triple_pattern(pos: dict[int, int], i: int, j: int, k: int) -> int:
    # bits for (ij, ik, jk), most significant first
    return (pos[j] < pos[i]) << 2 | (pos[k] < pos[i]) << 1 | (pos[k] < pos[j])


def is_compatible_order(order: LinearOrder | Sequence[int], T: InversionSet) -> bool:
    """Whether ``order`` is a snake of ``T``."""
    if not isinstance(order, LinearOrder):
        order = LinearOrder(tuple(order))
    if order.n != T.n:
        raise ValueError(f"order on {order.n} colors vs tiling on {T.n}")
    pos = order.position
    bits = T.bits
    for r, (i, j, k) in enumerate(lambda_space(T.n).triples):
        allowed = _TERMINAL if bits >> r & 1 else _INITIAL
        if _triple_pattern(pos, i, j, k) not in allowed:
            return False
    return True


def sigma(T: InversionSet) -> list[LinearOrder]:
    """All linear orders compatible with ``T``, in lexicographic order of sequences.

    Exhaustive over ``n!`` orders, so ``n`` is capped at ``MAX_SNAKE_N``.
    """
    if T.n > MAX_SNAKE_N:
        raise ValueError(f"sigma enumerates n! orders; n={T.n} exceeds {MAX_SNAKE_N}")
    return [LinearOrder(p) for p in permutations(range(1, T.n + 1))
            if is_compatible_order(LinearOrder(p), T)]


# cyclic restrictions of three candidates a<b<c, written as sequences of 1,2,3
_CYCLES = (frozenset({(1, 2, 3), (2, 3, 1), (3, 1, 2)}),
           frozenset({(1, 3, 2), (3, 2, 1), (2, 1, 3)}))


def is_condorcet_domain(orders: Iterable[LinearOrder | Sequence[int]]) -> Verdict:
    """Whether simple majority over any profile from ``orders`` is acyclic.

    Three voters produce a majority cycle on candidates ``a<b<c`` exactly when
    their restrictions to ``{a, b, c}`` are the three rotations of one cyclic
    order, so it is enough to look at which restrictions occur.  The witness
    is ``(candidates, (order1, order2, order3))``.
    """
    orders = [o if isinstance(o, LinearOrder) else LinearOrder(tuple(o)) for o in orders]
    orders = sorted(set(orders), key=lambda o: o.seq)
    if not orders:
        return Verdict(True)
    n = orders[0].n
    if any(o.n != n for o in orders):
        raise ValueError("orders on different numbers of candidates")
    for cand in combinations(range(1, n + 1), 3):
        seen: dict[tuple[int, ...], LinearOrder] = {}
        for o in orders:
            seen.setdefault(o.restrict(cand).seq, o)
        for cycle in _CYCLES:
            if cycle <= seen.keys():
                return Verdict(False, (cand, tuple(seen[r] for r in sorted(cycle))))
    return Verdict(True)
