"""
Certifying nodes on a quartic surface
=====================================

Build a quartic from the variables, look for its singular points
numerically, then re-check each candidate with exact rational arithmetic.
"""

from nodalquartic import ProjPointQ, SearchConfig, certify_point, find_singular_numeric, variables

x, y, z, w = variables()

# a quartic with one singular point at (0:0:0:1)
F = x**4 + y**4 + z**4 - w**2 * (x**2 + y**2 + z**2)
print("F =", F)

# the exact verdict: on the surface, gradient zero, Hessian of rank 3
rep = certify_point(F, ProjPointQ((0, 0, 0, 1)))
print(rep.classification.value, "hessian rank", rep.hessian_rank)

# a point off the surface and a smooth point for comparison
print(certify_point(F, ProjPointQ((1, 0, 0, 0))).classification.value)
print(certify_point(F, ProjPointQ((1, 0, 0, 1))).classification.value)

# Newton search in the four affine charts; every hit is rounded and re-certified
for c in find_singular_numeric(F, SearchConfig(seed_count=50)):
    print(c.point, c.report.classification.value, c.report.mode.value, "cluster", c.cluster_size)

# xyzw is singular along whole lines, so nothing there is a node
for c in find_singular_numeric(x * y * z * w, SearchConfig(seed_count=50)):
    print(c.point, c.report.classification.value, "rank", c.report.hessian_rank)
