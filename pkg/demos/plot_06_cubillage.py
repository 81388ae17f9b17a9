"""
Stick orientations and cubillage domains
========================================

Orient each quadruple's stick forwards or backwards.  When the induced
precedence graph on triples is acyclic, the tilings whose trace on every
stick is an initial segment form a maximal CSD.
"""

import random

from rhombus_csd.csd import is_maximal_csd
from rhombus_csd.cubillage import (
    acyclic_orientations, chain_from_linear, cubillage_csd, precedence_digraph,
    random_linear_extension,
)

for o in acyclic_orientations(5):
    D = cubillage_csd(o)
    flags = "".join(v.value for _, v in o.items())
    print(f"{flags}  size {len(D):2}  maximal {bool(is_maximal_csd(D))}")

# %%
# A random admissible order gives a maximal chain of tilings.
o = acyclic_orientations(5)[3]
seq = random_linear_extension(precedence_digraph(o), random.Random(0))
for T in chain_from_linear(seq):
    print(T)
