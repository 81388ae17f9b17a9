"""
Do minimal intervals come from flips?
=====================================

Call a pair of tilings a gap when nothing lies strictly between them under
"between" (meet inside, join outside).  For n up to 5 every gap is a single
flip.  On six colors this breaks.
"""

from rhombus_csd.tiling import geodesic_interval, minimal_interval_gaps

for n in (4, 5):
    print(f"n={n}: non-flip gaps:", len(minimal_interval_gaps(n)))

gaps = minimal_interval_gaps(6)
print("n=6: non-flip gaps:", len(gaps))
A, B = gaps[0]
print(A, B, "differ in", len(A ^ B), "triples;",
      len(geodesic_interval(A, B)), "tilings on shortest flip paths")
