"""
Snakes: linear orders compatible with a tiling
==============================================

Each tiling determines a set of orders of the colors.  That set is always a
Condorcet domain.
"""

from rhombus_csd import anti_standard, enumerate_all, standard
from rhombus_csd.snakes import is_condorcet_domain, sigma

print("orders for the full n=3 tiling:", [str(o) for o in sigma(anti_standard(3))])

domain = sigma(standard(5))
print(len(domain), "snakes for the standard n=5 tiling, e.g.", domain[8])

# %%
# Sizes vary with the tiling but the Condorcet property never fails.
sizes = sorted({len(sigma(T)) for T in enumerate_all(5)})
print("snake domain sizes, n=5:", sizes)
print("all Condorcet:", all(is_condorcet_domain(sigma(T)) for T in enumerate_all(5)))
