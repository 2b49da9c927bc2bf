"""
Stalks of the intersection complex at a nodal point
===================================================

Each node contributes a rank-one operator N(psi) = <psi, sigma> sigma on a
22-dimensional lattice model.  The complex built from products of these
operators has cohomology only in degree 0.
"""

from nodalquartic import OperatorFamily, betti_nodal_quartic, build_bcomplex, cohomology, nodal_model, nodal_stalk, pl_operator
from nodalquartic import linalg

cfg = nodal_model(3)
N0, N1 = pl_operator(cfg, 0), pl_operator(cfg, 1)

# N^2 = -2N and disjoint cycles give N0 N1 = 0
print(linalg.matmul(N0, N0) == [[-2 * v for v in row] for row in N0])
print(linalg.is_zero(linalg.matmul(N0, N1)))

# H^0 = 22 - delta, everything above vanishes
for delta in (0, 1, 2, 8, 16):
    print(delta, nodal_stalk(delta).dims[:4])

# Betti numbers of the nodal quartic itself
print(betti_nodal_quartic(16))

# the engine is not rigged: a repeated Jordan block has H^1 = 1
J = ((0, 1), (0, 0))
b = build_bcomplex(OperatorFamily(2, (J, J)))
print("B dims", b.dims(), "H", cohomology(b).dims)
