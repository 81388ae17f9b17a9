"""
The majority paradox for tilings
================================

Triple-wise majority of three tilings need not be a tiling.
"""

from rhombus_csd import InversionSet, is_tiling
from rhombus_csd.aggregation import MajoritySystem, aggregate_with_system, simple_majority

profile = [InversionSet.parse(s) for s in ("1110", "0000", "0111")]
agg = simple_majority(profile)
print("majority:", agg, "is a tiling:", bool(is_tiling(agg)))

# %%
# A dictatorship never breaks anything: the result is the dictator's tiling.
F = MajoritySystem.dictatorship(3, 0)
print("dictator 0:", aggregate_with_system(profile, F))

# %%
# Weighted voting with weights 3,1,1,1,1 on five voters (odd total, so no ties).
five = profile + [InversionSet.parse("1100"), InversionSet.parse("0001")]
F = MajoritySystem.weighted([3, 1, 1, 1, 1])
out = aggregate_with_system(five, F)
print("weighted:", out, bool(is_tiling(out)))
