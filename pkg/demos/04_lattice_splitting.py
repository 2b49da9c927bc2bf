"""
Splitting off the vanishing cycles
==================================

In the rank-22 model the span of the 16 vanishing cycles of a Kummer
quartic, its orthogonal complement, and the part of that complement
orthogonal to the polarization have ranks 16, 6 and 5.
"""

from nodalquartic import nodal_model, sigma_splitting

for delta in (0, 1, 6, 16):
    sigma, perp, prim = sigma_splitting(nodal_model(delta))
    print(delta, (sigma.dim, perp.dim, prim.dim), "1 + prim + sigma =", 1 + prim.dim + sigma.dim)

cfg = nodal_model(16)
h = cfg.polarization
sigma, perp, prim = sigma_splitting(cfg)

# the polarization is in the complement but not in its primitive part
print(perp.contains(h), prim.contains(h))

# the same dims come back from the command line: nodalquartic lattice --delta 16
