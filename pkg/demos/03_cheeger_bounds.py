# # Cheeger-type bounds on the normalized cut-modularity
#
# From mu_1 = max(0, mu_G) alone we get 1 - 2 sqrt(1 - mu_1^2) <= q_ncut <= mu_1
# on non-star graphs. A near two-valued eigenvector gives the sharper-looking
# lower bound 1 - 4 r^4 (1 - mu). The oracle supplies the exact q_ncut.

from modbounds import generators as gen
from modbounds.certificates import laplacian_cheeger, perturbation_cheeger, perturbation_data, simple_cheeger
from modbounds.oracle import brute_force_cuts
from modbounds.spectral import normalized_algebraic_modularity

graphs = {
    "C6": gen.cycle(6),
    "barbell": gen.barbell(),
    "ladder5": gen.clique_ladder(5),
    "planted": gen.planted_partition([6, 6], 0.8, 0.1, seed=4),
    "star6": gen.star(6),
}

print(f"{'graph':8s} {'lower':>9s} {'q_ncut':>8s} {'upper':>8s}  {'r':>6s} {'pert.':>9s}  h-bounds")
for name, g in graphs.items():
    mg = normalized_algebraic_modularity(g)
    mu1 = max(0.0, mg.value)
    q = float(brute_force_cuts(g).q_ncut.value)
    sc = simple_cheeger(g, mu1)
    pc = perturbation_cheeger(g, mg.vector, mg.value)
    lc = laplacian_cheeger(g)
    r = pc.hypothesis_detail.get("r", float("nan"))
    pert = pc.bounds.get("lower", float("nan"))
    tag = "" if sc.certified else f"  ({sc.verdict.value})"
    print(f"{name:8s} {sc.bounds['lower']:9.4f} {q:8.4f} {sc.bounds['upper']:8.4f}  {r:6.3f} {pert:9.4f}"
          f"  [{lc.bounds['lower']:.3f}, {lc.bounds['upper']:.3f}]{tag}")

# On the clique ladder the leading eigenvector is exactly two-valued, so r = 1
# and the perturbation bound reads 1 - 4 (1 - mu).

g = graphs["ladder5"]
d = perturbation_data(g, normalized_algebraic_modularity(g).vector)
print(f"ladder5: r = {d.r:.12f}, p = {d.p:.4f}, q = {d.q:.4f}")
