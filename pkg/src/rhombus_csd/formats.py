"""
Text formats shared by the command line and the demos.

Tiling files: optional header ``n=<k>``, then one inversion set per line as a
bitstring or a comma-separated triple list.  ``#`` starts a comment.

Majority-system files: one big coalition per line as a 0/1 string over voters,
leftmost character = voter 0.
"""

from __future__ import annotations

from typing import Iterable

from .aggregation import MajoritySystem
from .lambda_core import InversionSet
from .snakes import LinearOrder, parse_order

__all__ = [
    "read_inversion_sets", "write_inversion_sets", "format_set",
    "read_majority_system", "write_majority_system", "read_orders",
]


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _header(lines: list[str], n: int | None) -> tuple[int | None, list[str]]:
    if lines and lines[0].replace(" ", "").startswith("n="):
        try:
            declared = int(lines[0].replace(" ", "")[2:])
        except ValueError:
            raise ValueError(f"malformed header {lines[0]!r}") from None
        if n is not None and n != declared:
            raise ValueError(f"header says n={declared} but n={n} was requested")
        return declared, lines[1:]
    return n, lines


def read_inversion_sets(text: str, n: int | None = None) -> tuple[int, list[InversionSet]]:
    n, lines = _header(_lines(text), n)
    sets = [InversionSet.parse(line, n) for line in lines]
    if n is None:
        if not sets:
            raise ValueError("empty input without an n=<k> header")
        n = sets[0].n
    if any(P.n != n for P in sets):
        raise ValueError("inputs mix different numbers of colors")
    return n, sets


def format_set(P: InversionSet, style: str = "bits") -> str:
    if style == "triples":
        return P.to_triple_list() or "-"
    return P.to_bitstring()


def write_inversion_sets(n: int, sets: Iterable[InversionSet], style: str = "bits") -> str:
    return f"n={n}\n" + "".join(format_set(P, style) + "\n" for P in sets)


def read_majority_system(text: str) -> MajoritySystem:
    lines = _lines(text)
    if not lines:
        raise ValueError("majority system file lists no coalitions")
    width = len(lines[0])
    big = set()
    for line in lines:
        if len(line) != width or set(line) - {"0", "1"}:
            raise ValueError(f"malformed coalition {line!r}")
        big.add(sum(1 << v for v, ch in enumerate(line) if ch == "1"))
    return MajoritySystem(width, frozenset(big))


def write_majority_system(F: MajoritySystem) -> str:
    rows = sorted("".join("1" if S >> v & 1 else "0" for v in range(F.voter_count))
                  for S in F.big)
    return "".join(r + "\n" for r in rows)


def read_orders(text: str) -> list[LinearOrder]:
    _, lines = _header(_lines(text), None)
    return [parse_order(line) for line in lines]
