"""
Admissible orders on the triple set and the cubillage super-domains they define.

Each stick is oriented DIRECT (lexicographic) or REVERSE.  Chaining consecutive
stick members along their orientation gives a digraph on the triples; when it
is acyclic, its transitive closure is an admissible partial order, and the
tilings whose trace on every stick is an initial segment in the stick's
orientation form a maximal normal CSD.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Sequence

from .csd import SuperDomain
from .lambda_core import InversionSet, Stick, Triple, Verdict, lambda_space, parse_triple
from .tiling import Tiling, enumerate_all, stick_pattern

__all__ = [
    "Orientation", "StickOrientations", "CyclicOrientationError", "AdmissibleOrder",
    "validate_admissible", "precedence_digraph", "cubillage_csd", "chain_from_linear",
    "acyclic_orientations", "random_linear_extension", "parse_orientations",
]


class Orientation(Enum):
    DIRECT = "D"
    REVERSE = "R"


@dataclass(frozen=True)
class StickOrientations:
    """One orientation per stick, encoded as a bitmask over sticks in lex order.

    Bit ``s`` set means stick ``s`` is REVERSE.
    """
    n: int
    mask: int

    def __post_init__(self):
        count = len(lambda_space(self.n).sticks)
        if not 0 <= self.mask < 1 << count:
            raise ValueError(f"orientation mask {self.mask:#x} does not fit {count} sticks")

    @classmethod
    def all_direct(cls, n: int) -> StickOrientations:
        return cls(n, 0)

    @classmethod
    def all_reverse(cls, n: int) -> StickOrientations:
        return cls(n, (1 << len(lambda_space(n).sticks)) - 1)

    @classmethod
    def from_mapping(cls, n: int, orient: dict[tuple[int, ...], Orientation]) -> StickOrientations:
        space = lambda_space(n)
        quads = [s.quadruple for s in space.sticks]
        missing = [q for q in quads if q not in orient]
        if missing:
            raise ValueError(f"no orientation given for stick {missing[0]}")
        extra = set(orient) - set(quads)
        if extra:
            raise ValueError(f"{sorted(extra)[0]} is not a stick of [1..{n}]")
        return cls(n, sum(1 << s for s, q in enumerate(quads)
                          if orient[q] is Orientation.REVERSE))

    def __getitem__(self, s: int) -> Orientation:
        return Orientation.REVERSE if self.mask >> s & 1 else Orientation.DIRECT

    def items(self) -> list[tuple[Stick, Orientation]]:
        return [(st, self[s]) for s, st in enumerate(lambda_space(self.n).sticks)]

    def to_text(self) -> str:
        return "".join(f"{st}:{o.value}\n" for st, o in self.items())


def parse_orientations(text: str, n: int) -> StickOrientations:
    """Read lines ``ijkl:D`` / ``ijkl:R``; blank lines and ``#`` comments are skipped."""
    orient = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("n="):
            continue
        quad, _, flag = line.partition(":")
        quad = quad.strip()
        parts = quad.split(".") if "." in quad else list(quad)
        try:
            q = tuple(int(p) for p in parts)
            o = Orientation(flag.strip().upper())
        except ValueError:
            raise ValueError(f"malformed orientation line {raw!r}") from None
        if q in orient:
            raise ValueError(f"stick {quad} oriented twice")
        orient[q] = o
    return StickOrientations.from_mapping(n, orient)


class CyclicOrientationError(ValueError):
    def __init__(self, cycle: Sequence[Triple]):
        super().__init__("stick orientations induce a cycle: " + " -> ".join(map(str, cycle)))
        self.cycle = tuple(cycle)


def _generating_edges(o: StickOrientations) -> list[tuple[int, int]]:
    space = lambda_space(o.n)
    edges = set()
    for s, ranks in enumerate(space.stick_ranks):
        seq = ranks[::-1] if o.mask >> s & 1 else ranks
        edges.update(zip(seq, seq[1:]))
    return sorted(edges)


class AdmissibleOrder:
    """Transitive closure of the stick precedence digraph.

    ``below[r]`` is the bitmask of ranks strictly preceding the triple of rank ``r``.
    """

    def __init__(self, orientations: StickOrientations, edges: list[tuple[int, int]],
                 topo: list[int], below: list[int]):
        self.orientations = orientations
        self.n = orientations.n
        self.edges = edges
        self.topological = topo
        self.below = below

    def precedes(self, a: Sequence[int], b: Sequence[int]) -> bool:
        index = lambda_space(self.n).index
        return bool(self.below[index[Triple(*b)]] >> index[Triple(*a)] & 1)

    def relations(self) -> list[tuple[Triple, Triple]]:
        triples = lambda_space(self.n).triples
        return [(triples[a], triples[b]) for b in range(len(self.below))
                for a in range(len(self.below)) if self.below[b] >> a & 1]

    def is_ideal(self, P: InversionSet) -> bool:
        """Whether ``P`` is downward closed (a stack)."""
        bits = P.bits
        return all(self.below[r] & ~bits == 0
                   for r in range(len(self.below)) if bits >> r & 1)

    def linear_extension(self) -> list[Triple]:
        triples = lambda_space(self.n).triples
        return [triples[r] for r in self.topological]

    def to_dot(self) -> str:
        triples = lambda_space(self.n).triples
        lines = [f"digraph precedence_n{self.n} {{"]
        for t in triples:
            lines.append(f'  "{t}";')
        for a, b in self.edges:
            lines.append(f'  "{triples[a]}" -> "{triples[b]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def precedence_digraph(o: StickOrientations) -> AdmissibleOrder:
    """Admissible partial order induced by the orientations.

    Raises :class:`CyclicOrientationError` carrying a directed cycle of triples.
    """
    space = lambda_space(o.n)
    edges = _generating_edges(o)
    preds: dict[int, set[int]] = {r: set() for r in range(space.size)}
    for a, b in edges:
        preds[b].add(a)
    sorter = TopologicalSorter(preds)
    try:
        topo = list(sorter.static_order())
    except CycleError as exc:
        # graphlib reports the cycle in edge order, start node repeated at the end
        cycle = exc.args[1]
        raise CyclicOrientationError([space.triples[r] for r in cycle]) from None
    below = [0] * space.size
    for r in topo:
        for a in preds[r]:
            below[r] |= below[a] | 1 << a
    return AdmissibleOrder(o, edges, topo, below)


def acyclic_orientations(n: int) -> list[StickOrientations]:
    """All orientation assignments whose precedence digraph is acyclic."""
    count = len(lambda_space(n).sticks)
    out = []
    for mask in range(1 << count):
        o = StickOrientations(n, mask)
        try:
            precedence_digraph(o)
        except CyclicOrientationError:
            continue
        out.append(o)
    return out


def _initial_patterns(reverse: bool) -> frozenset[int]:
    if reverse:
        return frozenset({0b0000, 0b0001, 0b0011, 0b0111, 0b1111})
    return frozenset({0b0000, 0b1000, 0b1100, 0b1110, 0b1111})


def cubillage_csd(o: StickOrientations) -> SuperDomain:
    """Tilings whose trace on every stick is an initial segment in its orientation."""
    precedence_digraph(o)
    space = lambda_space(o.n)
    allowed = [_initial_patterns(bool(o.mask >> s & 1)) for s in range(len(space.sticks))]
    members = [T for T in enumerate_all(o.n)
               if all(stick_pattern(T.bits, ranks) in allowed[s]
                      for s, ranks in enumerate(space.stick_ranks))]
    return SuperDomain(o.n, members)


def _as_triples(seq: Iterable[Sequence[int] | str]) -> list[Triple]:
    return [parse_triple(t) if isinstance(t, str) else Triple(*t) for t in seq]


def validate_admissible(seq: Sequence[Sequence[int] | str], n: int | None = None) -> Verdict:
    """Check that a linear order of all triples is lex or anti-lex on every stick.

    On success the witness is the :class:`StickOrientations` it exhibits; on
    failure it is the first offending :class:`Stick`.
    """
    triples = _as_triples(seq)
    if n is None:
        n = max((t.k for t in triples), default=3)
    space = lambda_space(n)
    if sorted(triples) != list(space.triples):
        raise ValueError(f"sequence is not a permutation of the triples of [1..{n}]")
    pos = {t: p for p, t in enumerate(triples)}
    mask = 0
    for s, st in enumerate(space.sticks):
        p = [pos[t] for t in st.members]
        if p == sorted(p):
            continue
        if p == sorted(p, reverse=True):
            mask |= 1 << s
            continue
        return Verdict(False, st)
    return Verdict(True, StickOrientations(n, mask))


def chain_from_linear(seq: Sequence[Sequence[int] | str], n: int | None = None) -> list[Tiling]:
    """The maximal chain of prefixes of an admissible linear order on the triples."""
    verdict = validate_admissible(seq, n)
    if not verdict:
        raise ValueError(f"sequence is not admissible on stick {verdict.witness}")
    n = verdict.witness.n
    index = lambda_space(n).index
    chain = [Tiling(n, 0)]
    bits = 0
    for t in _as_triples(seq):
        bits |= 1 << index[t]
        chain.append(Tiling(n, bits))
    return chain


def random_linear_extension(order: AdmissibleOrder, rng: random.Random) -> list[Triple]:
    """A uniformly chosen available minimum at each step (not uniform over extensions)."""
    size = len(order.below)
    triples = lambda_space(order.n).triples
    placed = 0
    out = []
    while len(out) < size:
        ready = [r for r in range(size)
                 if not placed >> r & 1 and order.below[r] & ~placed == 0]
        r = rng.choice(ready)
        placed |= 1 << r
        out.append(triples[r])
    return out
