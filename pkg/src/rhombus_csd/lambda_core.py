"""
Addressing layer for the triple set of ``[n]``.

Triples ``i < j < k`` of colors are ranked lexicographically, so for n=4 the
ranks are ``123 -> 0, 124 -> 1, 134 -> 2, 234 -> 3`` and the bitstring
``"1110"`` means ``{123, 124, 134}``.  An :class:`InversionSet` stores its
members as a Python ``int`` whose bit ``r`` is the triple of rank ``r``.

>>> P = InversionSet.parse("1110")
>>> P.n, [str(t) for t in P.triples()]
(4, ['123', '124', '134'])
>>> str(~P)
'0001'
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from math import comb
from typing import Any, Iterable, NamedTuple, Sequence

__all__ = [
    "MAX_N_ENV", "max_n", "Verdict", "Triple", "Stick", "LambdaSpace",
    "lambda_space", "triple_rank", "triple_unrank", "sticks",
    "restriction_map", "InversionSet", "parse_triple", "format_triple",
]

MAX_N_ENV = "RHOMBUS_CSD_MAX_N"
_DEFAULT_MAX_N = 12


def max_n() -> int:
    """Largest supported color count; overridable through ``RHOMBUS_CSD_MAX_N``."""
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return _DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{MAX_N_ENV} must be positive, got {value}")
    return value


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"color count must be a positive integer, got {n!r}")
    if n > max_n():
        raise ValueError(f"n={n} exceeds the configured cap {max_n()} (set {MAX_N_ENV})")


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate together with a witness explaining a failure.

    ``holds`` is ``None`` when a budgeted search gave up before deciding.
    """
    holds: bool | None
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds is True

    @property
    def status(self) -> str:
        return {True: "holds", False: "fails", None: "unknown"}[self.holds]


class Triple(NamedTuple):
    i: int
    j: int
    k: int

    @property
    def amplitude(self) -> int:
        return self.k - self.i

    @property
    def is_dense(self) -> bool:
        return self.k - self.i == 2

    def __str__(self) -> str:
        return format_triple(self)


def format_triple(t: Sequence[int]) -> str:
    """``(1, 2, 3) -> "123"``; colors above 9 force the dotted form ``"1.2.10"``."""
    if all(c < 10 for c in t):
        return "".join(map(str, t))
    return ".".join(map(str, t))


def parse_triple(text: str) -> Triple:
    text = text.strip()
    if "." in text or "-" in text:
        parts = text.replace("-", ".").split(".")
    else:
        parts = list(text)
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"malformed triple {text!r}") from None
    if len(values) != 3:
        raise ValueError(f"malformed triple {text!r}")
    i, j, k = values
    if not 1 <= i < j < k:
        raise ValueError(f"triple {text!r} is not increasing 1-based colors")
    return Triple(i, j, k)


class Stick(NamedTuple):
    """The four triples of a quadruple ``i<j<k<l`` in lexicographic order."""
    quadruple: tuple[int, int, int, int]
    members: tuple[Triple, Triple, Triple, Triple]

    def __str__(self) -> str:
        return "".join(map(str, self.quadruple)) if self.quadruple[-1] < 10 \
            else ".".join(map(str, self.quadruple))


class LambdaSpace:
    """Precomputed ranking data for the triples of ``[n]``.

    Use :func:`lambda_space` to get the shared instance for a given ``n``.
    """

    def __init__(self, n: int):
        self.n = n
        self.triples: tuple[Triple, ...] = tuple(
            Triple(*c) for c in combinations(range(1, n + 1), 3))
        self.size = len(self.triples)
        self.index: dict[Triple, int] = {t: r for r, t in enumerate(self.triples)}
        self.full = (1 << self.size) - 1
        self.sticks: tuple[Stick, ...] = tuple(
            Stick(q, (Triple(q[0], q[1], q[2]), Triple(q[0], q[1], q[3]),
                      Triple(q[0], q[2], q[3]), Triple(q[1], q[2], q[3])))
            for q in combinations(range(1, n + 1), 4))
        # ranks of each stick's members, in member order
        self.stick_ranks: tuple[tuple[int, int, int, int], ...] = tuple(
            tuple(self.index[t] for t in s.members) for s in self.sticks)
        self.stick_masks: tuple[int, ...] = tuple(
            sum(1 << r for r in ranks) for ranks in self.stick_ranks)
        self.dense_ranks: tuple[int, ...] = tuple(
            self.index[Triple(j - 1, j, j + 1)] for j in range(2, n))

    def __repr__(self) -> str:
        return f"LambdaSpace(n={self.n})"


@cache
def lambda_space(n: int) -> LambdaSpace:
    _check_n(n)
    return LambdaSpace(n)


def _check_triple(t: Sequence[int], n: int) -> Triple:
    if len(t) != 3:
        raise ValueError(f"a triple has three colors, got {t!r}")
    i, j, k = t
    if not 1 <= i < j < k <= n:
        raise ValueError(f"{t!r} is not a triple i<j<k of colors in [1..{n}]")
    return Triple(i, j, k)


def triple_rank(t: Sequence[int], n: int) -> int:
    """Lexicographic position of ``t`` among all triples of ``[n]`` (0-based).

    >>> triple_rank((1, 3, 5), 5)
    4
    """
    i, j, k = _check_triple(t, n)
    # triples with a smaller first color, then smaller second color, then k
    before_i = sum(comb(n - a, 2) for a in range(1, i))
    before_j = sum(n - b for b in range(i + 1, j))
    return before_i + before_j + (k - j - 1)


def triple_unrank(r: int, n: int) -> Triple:
    space = lambda_space(n)
    if not 0 <= r < space.size:
        raise ValueError(f"rank {r} out of range for n={n}")
    return space.triples[r]


def sticks(n: int) -> list[Stick]:
    """All sticks of ``[n]``, one per quadruple; empty below n=4."""
    return list(lambda_space(n).sticks)


@cache
def restriction_map(K: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Ranks in ``[n]`` of the triples of ``K``, listed in the rank order of ``[|K|]``.

    Position ``r`` of the result holds the ``[n]``-rank of the triple whose
    relabeling through the order-preserving bijection ``K -> [|K|]`` has rank ``r``.
    """
    K = tuple(K)
    if len(K) < 3:
        raise ValueError(f"restriction needs at least 3 colors, got {K!r}")
    if list(K) != sorted(set(K)):
        raise ValueError(f"color subset must be strictly increasing, got {K!r}")
    if K[0] < 1 or K[-1] > n:
        raise ValueError(f"color subset {K!r} is not inside [1..{n}]")
    index = lambda_space(n).index
    return tuple(index[Triple(*c)] for c in combinations(K, 3))


def _gather(bits: int, ranks: Sequence[int]) -> int:
    out = 0
    for pos, r in enumerate(ranks):
        if bits >> r & 1:
            out |= 1 << pos
    return out


class InversionSet:
    """A subset of the triples of ``[n]`` (a pseudo-tiling).

    Immutable and hashable; equality compares ``n`` and membership only, so a
    :class:`~rhombus_csd.tiling.Tiling` equals the plain set it wraps.
    """

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        space = lambda_space(n)
        if bits < 0 or bits > space.full:
            raise ValueError(f"bit vector {bits:#x} does not fit C({n},3)={space.size} triples")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return (type(self), (self.n, self.bits))

    # construction -----------------------------------------------------------

    @classmethod
    def empty(cls, n: int):
        return cls(n, 0)

    @classmethod
    def full(cls, n: int):
        return cls(n, lambda_space(n).full)

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[Sequence[int]]):
        index = lambda_space(n).index
        bits = 0
        for t in triples:
            bits |= 1 << index[_check_triple(t, n)]
        return cls(n, bits)

    @classmethod
    def from_bitstring(cls, text: str):
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"malformed bitstring {text!r}")
        n = _n_for_size(len(text))
        bits = sum(1 << r for r, ch in enumerate(text) if ch == "1")
        return cls(n, bits)

    @classmethod
    def parse(cls, text: str, n: int | None = None):
        """Read either the bitstring or the comma-separated triple-list format.

        A triple list needs ``n`` unless it is given as a bitstring; the empty
        set can be written ``""`` or ``"-"`` when ``n`` is supplied.

        >>> str(InversionSet.parse("123,124", n=4))
        '1100'
        """
        text = text.strip()
        if text and set(text) <= {"0", "1"} and "," not in text and (
                n is None or len(text) == comb(n, 3)):
            out = cls.from_bitstring(text)
            if n is not None and out.n != n:
                raise ValueError(f"bitstring length {len(text)} does not match n={n}")
            return out
        if n is None:
            raise ValueError(f"cannot infer n for triple list {text!r}; pass n")
        if text in ("", "-", "{}"):
            return cls(n, 0)
        return cls.from_triples(n, [parse_triple(p) for p in text.split(",") if p.strip()])

    # views -------------------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.bits.bit_count()

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self):
        triples = lambda_space(self.n).triples
        b = self.bits
        while b:
            low = b & -b
            yield triples[low.bit_length() - 1]
            b ^= low

    def triples(self) -> list[Triple]:
        return list(self)

    def __contains__(self, t) -> bool:
        index = lambda_space(self.n).index
        t = Triple(*t)
        return t in index and bool(self.bits >> index[t] & 1)

    def to_bitstring(self) -> str:
        size = lambda_space(self.n).size
        return "".join("1" if self.bits >> r & 1 else "0" for r in range(size))

    def to_triple_list(self) -> str:
        return ",".join(str(t) for t in self)

    def __str__(self) -> str:
        return self.to_bitstring()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_bitstring()!r})"

    def sort_key(self) -> tuple[int, str]:
        """Canonical order used for every set-valued output: rank, then bitstring."""
        return (self.rank, self.to_bitstring())

    # comparisons and set algebra ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, InversionSet):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def _peer(self, other: InversionSet) -> int:
        if not isinstance(other, InversionSet):
            raise TypeError(f"expected an InversionSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"mixed color counts {self.n} and {other.n}")
        return other.bits

    def __and__(self, other: InversionSet) -> InversionSet:
        return InversionSet(self.n, self.bits & self._peer(other))

    def __or__(self, other: InversionSet) -> InversionSet:
        return InversionSet(self.n, self.bits | self._peer(other))

    def __xor__(self, other: InversionSet) -> InversionSet:
        return InversionSet(self.n, self.bits ^ self._peer(other))

    def __sub__(self, other: InversionSet) -> InversionSet:
        return InversionSet(self.n, self.bits & ~self._peer(other))

    def __invert__(self) -> InversionSet:
        return InversionSet(self.n, self.bits ^ lambda_space(self.n).full)

    def __le__(self, other: InversionSet) -> bool:
        return self.bits & ~self._peer(other) == 0

    def __lt__(self, other: InversionSet) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: InversionSet) -> bool:
        return other <= self

    def __gt__(self, other: InversionSet) -> bool:
        return other < self

    def restrict(self, K: Sequence[int]) -> InversionSet:
        """``self ∩ Λ(K)`` relabeled onto ``[|K|]``."""
        K = tuple(K)
        return InversionSet(len(K), _gather(self.bits, restriction_map(K, self.n)))


@cache
def _n_for_size(size: int) -> int:
    for n in range(3, max_n() + 1):
        if comb(n, 3) == size:
            return n
    raise ValueError(f"bitstring length {size} is not C(n,3) for any n <= {max_n()}")
