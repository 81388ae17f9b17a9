"""
Symmetric domains from split sequences
======================================

An ordering of 2..n-1 splits the triples into n-2 tilings.  Every union of
parts is a tiling, giving a CSD of size 2^(n-2) closed under complement.
"""

from rhombus_csd.csd import is_csd, is_maximal_csd
from rhombus_csd.symmetric import boolean_csd, symmetric_partition

P = symmetric_partition((4, 5, 6, 2, 3))
print(P.to_text())

# %%
# Small cases are small enough to check maximality.
P5 = symmetric_partition((3, 2, 4))
D = boolean_csd(P5)
print(len(D), "tilings; CSD", bool(is_csd(D)), "maximal", bool(is_maximal_csd(D)))
print("same as (3,4,2):", P5 == symmetric_partition((3, 4, 2)))
