"""Rhombus tilings as inversion sets, majority aggregation and Condorcet super-domains."""

from .lambda_core import (
    InversionSet, Stick, Triple, Verdict, lambda_space, max_n, restriction_map,
    sticks, triple_rank, triple_unrank,
)
from .tiling import (
    FlipGraph, NotATilingError, Tiling, anti_standard, basis, dense_triple,
    enumerate_all, flip, flip_graph, geodesic_interval, interval_tiling, is_tiling,
    lattice_interval, median3, opposite, raising_flips, restrict, standard,
)

__version__ = "0.1.0"
