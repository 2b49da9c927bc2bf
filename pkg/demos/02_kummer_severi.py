"""
Sixteen nodes and the conditions they impose
============================================

A Kummer quartic built from the sextic x(x-1)(x-2)(x-3)(x-4)(x-5) has 16
rational nodes.  Evaluating all 35 quartic monomials at them gives a 16x35
matrix whose rank tells whether the nodes are independent conditions.
"""

from nodalquartic import SexticCurve, evaluation_matrix, independence_test, kummer_from_sextic, one_node_example

curve = SexticCurve.from_roots([0, 1, 2, 3, 4, 5])
out = kummer_from_sextic(curve)
print(len(out.quartic), "terms in the quartic")

# every candidate has already been certified exactly
for p, r in zip(out.node_candidates, out.reports):
    print(p, r.classification.value)

M = evaluation_matrix(out.node_candidates)
print("evaluation matrix", len(M), "x", len(M[0]))

# quartics through all 16 nodes form a space of dimension 35 - 16
rep = independence_test(out.quartic, out.node_candidates)
print(rep.to_json_dict())

# the one-node example sits at the other end
F, p = one_node_example()
print(independence_test(F, [p]).to_json_dict())

# moving the roots by a Mobius map gives a different quartic, same numbers
moved = [(2 * r + 1) / (r + 7) for r in curve.roots]
out2 = kummer_from_sextic(SexticCurve.from_roots(moved))
print(out2.quartic == out.quartic, independence_test(out2.quartic, out2.node_candidates) == rep)
