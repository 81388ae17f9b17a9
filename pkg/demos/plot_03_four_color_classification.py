"""
Maximal Condorcet super-domains on four colors
==============================================

All eight tilings sit on an octagon.  An exhaustive search finds every
maximal CSD; each is five consecutive wheel tilings or two opposite pairs.
"""

from rhombus_csd.csd import maximal_csds
from rhombus_csd.gallery import octagon_wheel

wheel = octagon_wheel()
print("wheel:", " ".join(str(T) for T in wheel))

for D in maximal_csds(4):
    kind = "consecutive" if len(D) == 5 else "opposite pairs"
    print(f"{len(D)} {kind:15} {' '.join(str(T) for T in D)}")
