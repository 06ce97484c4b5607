# # Modularity matrices and their spectra
#
# M = A - d d^T / vol V has the ones vector in its kernel; the normalized
# matrix Mn = D^{-1/2} M D^{-1/2} has sqrt(d) in its kernel. Their top
# eigenvalues orthogonal to those directions are m_G and mu_G.

import numpy as np

from modbounds import generators as gen
from modbounds.linalg import eig_sym
from modbounds.spectral import (
    adjacency_matrix,
    algebraic_modularity,
    laplacian_lambda2,
    modularity_matrix,
    normalized_algebraic_modularity,
    normalized_modularity_matrix,
    spectral_predicates,
)

np.set_printoptions(precision=4, suppress=True)

# For the 6-cycle Mn has eigenvalues 1/2, 1/2, 0 (sqrt d), -1/2, -1/2, -1.

c6 = gen.cycle(6)
print("Mn(C6):", eig_sym(normalized_modularity_matrix(c6)).values)

# Eigenvalues of A and M interlace, since M is a rank-one downdate of A.

g = gen.barbell()
alpha = eig_sym(adjacency_matrix(g)).values
m = eig_sym(modularity_matrix(g)).values
print("A:", alpha)
print("M:", m)

# m_G and mu_G; the leading eigenvector's sign pattern splits the triangles.

mg = algebraic_modularity(g)
mu = normalized_algebraic_modularity(g)
print(f"m_G = {mg.value:.6f} (simple: {mg.is_simple}), mu_G = {mu.value:.6f}")
print("nodal domain of the mu_G eigenvector:", np.flatnonzero(mu.vector >= 0))

# The normalized Laplacian's second eigenvalue is 1 - mu_G.

print(f"lambda_2 = {laplacian_lambda2(g):.6f}, 1 - mu_G = {1 - mu.value:.6f}")

# mu_G <= 0 exactly for complete multipartite graphs.

for name, h in [("K4", gen.complete(4)), ("C4", gen.cycle(4)), ("K2,3", gen.complete_multipartite([2, 3])), ("path5", gen.path(5))]:
    print(f"{name:6s} mu_G = {normalized_algebraic_modularity(h).value: .4f}")

# Structural predicates are evaluated as booleans.

for k, v in spectral_predicates(g).as_dict().items():
    print(f"  {k}: {v}")

# The in-house Householder + QL solver agrees with LAPACK.

Mn = normalized_modularity_matrix(g)
print("max |lapack - ql| =", np.abs(eig_sym(Mn).values - eig_sym(Mn, method="ql").values).max())
