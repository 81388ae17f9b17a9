"""
Tilings as inversion sets
=========================

A rhombus tiling of the 2n-gon is stored as the set of triples ``ijk`` it
inverts.  Ziegler's test decides which sets qualify, and flips move between
tilings one triple at a time.
"""

from rhombus_csd import InversionSet, enumerate_all, is_tiling, standard
from rhombus_csd.tiling import flip, flip_graph, raising_flips

# %%
# Four colors have four triples.  Bit strings read left to right in lex order.
for text in ["1110", "0110"]:
    v = is_tiling(InversionSet.parse(text))
    print(text, "tiling" if v else f"rejected on stick {v.witness}")

# %%
# Counting tilings for small n.
for n in range(3, 7):
    print(f"n={n}: {len(enumerate_all(n))} tilings")

# %%
# Climb from the standard tiling by always taking the first raising flip.
T = standard(5)
path = [T]
while raising_flips(T):
    T = flip(T, raising_flips(T)[0])
    path.append(T)
print(" -> ".join(str(X) for X in path))

# %%
# The whole flip graph for n=4 is an octagon.  Paste the DOT into graphviz.
print(flip_graph(4).to_dot())
