# # Certifying that a nodal domain is a module
#
# For an eigenpair (mu, v) of Mn with mu > 0, two sufficient conditions
# guarantee Q(S) > 0 for S = {i : v_i >= 0}: one compares mu with a
# threshold built from max v_i^2 / d_i, the other uses the angle between
# |v| and sqrt(d). We check every positive eigenpair against exact Q(S).

from modbounds import generators as gen
from modbounds.certificates import module_cert_a, module_cert_b
from modbounds.graph import VertexSet
from modbounds.measures import modularity
from modbounds.spectral import normalized_algebraic_modularity

g = gen.planted_partition([4, 4, 4], 0.8, 0.1, seed=7)
spec = normalized_algebraic_modularity(g).spectrum
print(g)
for k in range(g.n - 1):
    mu, v = spec.pair(k)
    if mu <= 1e-8:
        break
    a = module_cert_a(g, v, mu)
    b = module_cert_b(g, v, mu)
    S = VertexSet.from_members(g, a.nodal_set)
    print(f"pair {k}: mu = {mu:.4f}  S = {list(S.members)}  Q(S) = {modularity(g, S)}")
    print(f"   A: {a.verdict.value:17s} threshold = {a.hypothesis_detail['threshold']:.4f}")
    det = b.hypothesis_detail
    print(f"   B: {b.verdict.value:17s} cos = {det['cos_theta']:.4f} tan^2 = {det['tan2_theta']:.4f}"
          f" theorem={det['theorem_holds']} corollary={det['corollary_holds']}")

# On the barbell both conditions fire and S is one triangle, Q = 5/2.

bb = gen.barbell()
mg = normalized_algebraic_modularity(bb)
for cert in (module_cert_a(bb, mg.vector, mg.value), module_cert_b(bb, mg.vector, mg.value)):
    S = VertexSet.from_members(bb, cert.nodal_set)
    print(cert.name.value, cert.verdict.value, list(S.members), modularity(bb, S))
