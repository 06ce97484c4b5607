# # Graphs, vertex sets and modularity
#
# Build small graphs, pick vertex sets and evaluate the modularity
# functionals exactly. Every value below is a `Fraction`.

from modbounds import generators as gen
from modbounds.graph import VertexSet, classify_structure, e_in, e_out
from modbounds.measures import cut_functionals, modularity, partition_modularity
from modbounds.edgelist import read_edge_list, write_edge_list

# The barbell: two triangles {0,1,2} and {3,4,5} joined by the edge 2-3.

g = gen.barbell()
print(g, "degrees", g.degrees, "vol V =", g.volume)

# One triangle is a strong community: 6 internal edge-ends, one boundary edge.

S = VertexSet.from_members(g, [0, 1, 2])
print("e_in =", e_in(g, S), " e_out =", e_out(g, S), " vol S =", S.volume)
print("Q(S) =", modularity(g, S), " Q(complement) =", modularity(g, S.complement()))

# The cut report gathers the relative and normalized variants and the conductance.

r = cut_functionals(g, S)
print(f"q_rel = {r.q_rel}, q_norm = {r.q_norm}, h = {r.conductance}")

# Partition modularity sums Q over the parts and divides by vol V.

print("q(two triangles) =", partition_modularity(g, [S, S.complement()]))

# Complete graphs have no modules: every proper set has Q < 0.

k4 = gen.complete(4)
print("K4, Q({0,1}) =", modularity(k4, VertexSet.from_members(k4, [0, 1])))

# Structure classification recognises the complete multipartite family.

for name, h in [("C4", gen.cycle(4)), ("star5", gen.star(5)), ("K4", k4), ("barbell", g)]:
    st = classify_structure(h)
    print(f"{name:8s} {st.kind.value:22s} parts={st.parts}")

# Edge lists round-trip through the plain-text format.

text = write_edge_list(g)
print(text)
assert read_edge_list(text) == g
