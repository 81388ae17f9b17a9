"""
A 16-tiling domain on five colors
=================================

Sixteen tilings reached by short flip sequences from the standard tiling
form a closed CSD.  Is it maximal?  Checking every one of the 62 tilings
settles it.
"""

from rhombus_csd.csd import is_closed, is_convex, is_csd, is_maximal_csd
from rhombus_csd.gallery import five_color_median_domain

D = five_color_median_domain()
for T in D:
    print(T.to_triple_list() or "-")

print("CSD:", bool(is_csd(D)))
print("closed:", bool(is_closed(D)))
print("maximal:", bool(is_maximal_csd(D)))

# %%
# It is not convex: some tiling between two members is missing.
v = is_convex(D)
A, B, R = v.witness
print(f"between {A} and {B} lies {R}, which is not a member")
