"""
Named small super-domains used by the demos and tests.
"""

from __future__ import annotations

from .csd import SuperDomain
from .lambda_core import InversionSet
from .tiling import Tiling, flip_graph

__all__ = ["octagon_wheel", "five_color_median_domain", "FIVE_COLOR_FLIP_PATHS"]


def octagon_wheel() -> list[Tiling]:
    """The eight tilings of Z(4;2) in cyclic flip order, starting at the standard one."""
    G = flip_graph(4)
    # the undirected flip graph is an 8-cycle; leave the standard tiling towards "0001"
    order = [G.index(InversionSet(4, 0))]
    order.append(min(G.neighbors(order[0]), key=lambda v: G.vertices[v].to_bitstring()))
    while len(order) < len(G.vertices):
        order.append(next(v for v in G.neighbors(order[-1]) if v != order[-2]))
    return [G.vertices[v] for v in order]


# Each vertex of the 16-tiling domain as the flips along a shortest path from
# the standard tiling (a triple list, applied left to right).
FIVE_COLOR_FLIP_PATHS: dict[str, tuple[str, ...]] = {
    "bottom": (),
    "b1": ("234",),
    "right1": ("234", "235"),
    "left1": ("234", "134"),
    "center": ("234", "134", "235"),
    "right2": ("234", "235", "245", "134"),
    "left2": ("234", "134", "124", "235"),
    "left_wing": ("234", "134", "124"),
    "right_wing": ("234", "235", "245"),
    "upper_center": ("234", "134", "235", "135"),
    "right3": ("234", "235", "245", "134", "135"),
    "left3": ("234", "134", "124", "235", "135"),
    "right_top": ("234", "235", "245", "134", "135", "145"),
    "left_top": ("234", "134", "124", "235", "135", "125"),
    "left_tip": ("234", "134", "124", "123"),
    "right_tip": ("234", "235", "245", "345"),
}


def five_color_median_domain() -> SuperDomain:
    """A 16-tiling CSD on five colors whose flip graph is a median graph.

    It contains the standard tiling but not the anti-standard one.
    """
    return SuperDomain(5, (Tiling.of(InversionSet.parse(",".join(path), n=5))
                           for path in FIVE_COLOR_FLIP_PATHS.values()))
