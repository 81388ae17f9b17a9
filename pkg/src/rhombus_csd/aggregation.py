"""
Majority aggregation of voter tilings.

Coalitions are voter subsets encoded as bitmasks: voter ``v`` is bit ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .lambda_core import InversionSet, Verdict, lambda_space

__all__ = [
    "MAX_VOTERS", "Profile", "MajoritySystem", "simple_majority",
    "supporters", "validate_majority_system", "aggregate_with_system",
    "union_of_intersections",
]

MAX_VOTERS = 16


@dataclass(frozen=True)
class Profile:
    """One inversion set per voter, all on the same ``n``."""
    votes: tuple[InversionSet, ...]

    def __post_init__(self):
        votes = tuple(self.votes)
        object.__setattr__(self, "votes", votes)
        if not votes:
            raise ValueError("a profile needs at least one voter")
        n = votes[0].n
        if any(v.n != n for v in votes):
            raise ValueError("profile mixes tilings of different n")

    @property
    def n(self) -> int:
        return self.votes[0].n

    def __len__(self) -> int:
        return len(self.votes)

    def __iter__(self):
        return iter(self.votes)

    def opposite(self) -> Profile:
        return Profile(tuple(~v for v in self.votes))


def _as_profile(p: Profile | Sequence[InversionSet]) -> Profile:
    return p if isinstance(p, Profile) else Profile(tuple(p))


def simple_majority(p: Profile | Sequence[InversionSet]) -> InversionSet:
    """Triples held by more than half of the voters; the voter count must be odd.

    The result need not be a tiling.
    """
    p = _as_profile(p)
    if len(p) % 2 == 0:
        raise ValueError(f"simple majority needs an odd number of voters, got {len(p)}")
    need = len(p) // 2 + 1
    size = lambda_space(p.n).size
    bits = 0
    for r in range(size):
        if sum(v.bits >> r & 1 for v in p.votes) >= need:
            bits |= 1 << r
    return InversionSet(p.n, bits)


@dataclass(frozen=True)
class MajoritySystem:
    """A family of "big" coalitions over ``voter_count`` voters, stored extensionally."""
    voter_count: int
    big: frozenset[int]

    def __post_init__(self):
        if not 1 <= self.voter_count <= MAX_VOTERS:
            raise ValueError(f"voter count must be in [1..{MAX_VOTERS}], got {self.voter_count}")
        big = frozenset(self.big)
        everyone = (1 << self.voter_count) - 1
        if any(not 0 <= S <= everyone for S in big):
            raise ValueError("coalition mask outside the voter set")
        object.__setattr__(self, "big", big)

    def is_big(self, coalition: int) -> bool:
        return coalition in self.big

    @classmethod
    def weighted(cls, weights: Sequence[float], quota: float | None = None) -> MajoritySystem:
        """Coalitions whose total weight exceeds ``quota`` (half the total by default)."""
        weights = list(weights)
        if quota is None:
            quota = sum(weights) / 2
        big = frozenset(S for S in range(1 << len(weights))
                        if sum(w for v, w in enumerate(weights) if S >> v & 1) > quota)
        return cls(len(weights), big)

    @classmethod
    def simple(cls, voter_count: int) -> MajoritySystem:
        return cls.weighted([1] * voter_count)

    @classmethod
    def dictatorship(cls, voter_count: int, dictator: int = 0) -> MajoritySystem:
        if not 0 <= dictator < voter_count:
            raise ValueError(f"dictator {dictator} is not a voter")
        return cls(voter_count, frozenset(S for S in range(1 << voter_count) if S >> dictator & 1))


def validate_majority_system(F: MajoritySystem) -> Verdict:
    """Check monotonicity and the deciding property; the witness is a coalition mask."""
    everyone = (1 << F.voter_count) - 1
    for S in range(everyone + 1):
        big = S in F.big
        if big:
            for v in range(F.voter_count):
                if not S >> v & 1 and (S | 1 << v) not in F.big:
                    return Verdict(False, S)
        if big == ((everyone ^ S) in F.big):
            return Verdict(False, S)
    return Verdict(True)


def supporters(p: Profile, r: int) -> int:
    """Coalition mask of voters whose set contains the triple of rank ``r``."""
    mask = 0
    for v, inv in enumerate(p.votes):
        if inv.bits >> r & 1:
            mask |= 1 << v
    return mask


def _check_system(p: Profile, F: MajoritySystem) -> None:
    if len(p) != F.voter_count:
        raise ValueError(f"profile has {len(p)} voters, system expects {F.voter_count}")
    verdict = validate_majority_system(F)
    if not verdict:
        raise ValueError(f"not a majority system (coalition {verdict.witness:#b})")


def aggregate_with_system(p: Profile | Sequence[InversionSet], F: MajoritySystem) -> InversionSet:
    """Triples whose supporting coalition is big in ``F``."""
    p = _as_profile(p)
    _check_system(p, F)
    bits = 0
    for r in range(lambda_space(p.n).size):
        if supporters(p, r) in F.big:
            bits |= 1 << r
    return InversionSet(p.n, bits)


def union_of_intersections(p: Profile | Sequence[InversionSet],
                           coalitions: Iterable[int]) -> InversionSet:
    """``∪_M ∩_{v∈M} Inv(T_v)`` over the given coalitions."""
    p = _as_profile(p)
    full = lambda_space(p.n).full
    bits = 0
    for M in coalitions:
        inter = full
        for v, inv in enumerate(p.votes):
            if M >> v & 1:
                inter &= inv.bits
        bits |= inter
    return InversionSet(p.n, bits)
