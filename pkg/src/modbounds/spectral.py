"""Modularity matrices, their spectra and the algebraic modularities.

``M = A - d d^T / vol V`` is the Newman-Girvan modularity matrix and
``Mn = D^{-1/2} M D^{-1/2} = An - delta delta^T / vol V`` its normalized
counterpart, with ``An = D^{-1/2} A D^{-1/2}`` and ``delta = sqrt(d)``.

The algebraic modularities are the largest Rayleigh quotients of ``M`` on
the complement of the all-ones vector and of ``Mn`` on the complement of
``delta``. Both are computed by pushing the known kernel direction to the
bottom of the spectrum with a rank-one shift larger than the spectral
diameter, then taking the top eigenpair.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .errors import DisconnectedError
from .graph import Graph, VertexSet, classify_structure, is_bipartite, is_connected
from .linalg import Spectrum, eig_sym, zero_threshold

__all__ = [
    "adjacency_matrix",
    "normalized_adjacency",
    "modularity_matrix",
    "normalized_modularity_matrix",
    "laplacian",
    "normalized_laplacian",
    "MATRICES",
    "AlgebraicModularity",
    "algebraic_modularity",
    "normalized_algebraic_modularity",
    "rightmost_eigenvalue",
    "laplacian_lambda2",
    "SpectralPredicates",
    "spectral_predicates",
    "nodal_domain",
    "ambiguous_entries",
    "BOUNDARY_TOL",
]

# entries of an eigenvector this small make the nodal domain ambiguous
BOUNDARY_TOL = 1e-10


def _check_connected(g: Graph, allow_disconnected: bool) -> None:
    if not allow_disconnected and not is_connected(g):
        raise DisconnectedError("graph must be connected (pass allow_disconnected=True to override)")


def adjacency_matrix(g: Graph) -> np.ndarray:
    return np.array(g.adjacency_matrix)


def normalized_adjacency(g: Graph) -> np.ndarray:
    inv = 1.0 / g.sqrt_degrees
    return g.adjacency_matrix * np.outer(inv, inv)


def modularity_matrix(g: Graph) -> np.ndarray:
    d = g.degree_vector
    return g.adjacency_matrix - np.outer(d, d) / g.volume


def normalized_modularity_matrix(g: Graph) -> np.ndarray:
    delta = g.sqrt_degrees
    return normalized_adjacency(g) - np.outer(delta, delta) / g.volume


def laplacian(g: Graph) -> np.ndarray:
    return np.diag(g.degree_vector) - g.adjacency_matrix


def normalized_laplacian(g: Graph) -> np.ndarray:
    return np.eye(g.n) - normalized_adjacency(g)


MATRICES = {
    "A": adjacency_matrix,
    "Anorm": normalized_adjacency,
    "M": modularity_matrix,
    "Mnorm": normalized_modularity_matrix,
    "L": laplacian,
    "Lnorm": normalized_laplacian,
}


@dataclass(frozen=True)
class AlgebraicModularity:
    """Top eigenpair of a modularity matrix after deflating its kernel vector.

    ``gap`` is the distance to the next eigenvalue of the deflated matrix
    (``inf`` for n = 1 after deflation) and ``is_simple`` compares it with
    the zero threshold ``threshold``.
    """

    value: float
    vector: np.ndarray
    is_simple: bool
    gap: float
    threshold: float
    spectrum: Spectrum

    @property
    def multiplicity(self) -> int:
        return self.spectrum.multiplicity(0, self.threshold)


def _top_of_deflated(mat, shift_dir, shift, tol, method):
    w = shift_dir / np.linalg.norm(shift_dir)
    spec = eig_sym(mat - shift * np.outer(w, w), method=method)
    thr = zero_threshold(mat, tol)
    gap = float(spec.values[0] - spec.values[1]) if len(spec) > 1 else float("inf")
    return spec, thr, gap


def algebraic_modularity(
    g: Graph,
    tol: float = 1e-8,
    method: str = "lapack",
    allow_disconnected: bool = False,
) -> AlgebraicModularity:
    """``max v^T M v / v^T v`` over ``v`` orthogonal to the ones vector.

    The eigenvector is oriented so that ``d^T u >= 0``.
    """
    _check_connected(g, allow_disconnected)
    M = modularity_matrix(g)
    spec, thr, gap = _top_of_deflated(M, np.ones(g.n), float(g.volume), tol, method)
    u = np.array(spec.vectors[:, 0])
    if g.degree_vector @ u < -1e-12 * g.volume:
        u = -u
    u.setflags(write=False)
    return AlgebraicModularity(float(spec.values[0]), u, gap > thr, gap, thr, spec)


def normalized_algebraic_modularity(
    g: Graph,
    tol: float = 1e-8,
    method: str = "lapack",
    allow_disconnected: bool = False,
) -> AlgebraicModularity:
    """``max v^T Mn v / v^T v`` over ``v`` orthogonal to ``delta``.

    The returned unit vector keeps the solver's canonical sign.
    """
    _check_connected(g, allow_disconnected)
    Mn = normalized_modularity_matrix(g)
    spec, thr, gap = _top_of_deflated(Mn, g.sqrt_degrees, 2.0, tol, method)
    v = spec.vectors[:, 0]
    return AlgebraicModularity(float(spec.values[0]), v, gap > thr, gap, thr, spec)


def rightmost_eigenvalue(g: Graph, method: str = "lapack") -> float:
    """Largest eigenvalue of the normalized modularity matrix."""
    return float(eig_sym(normalized_modularity_matrix(g), method=method).values[0])


def laplacian_lambda2(g: Graph, method: str = "lapack", allow_disconnected: bool = False) -> float:
    """Second smallest eigenvalue of ``I - An``."""
    _check_connected(g, allow_disconnected)
    if g.n < 2:
        raise ValueError("lambda_2 needs at least two vertices")
    spec = eig_sym(normalized_laplacian(g), method=method)
    return float(spec.values[-2])


def nodal_domain(g: Graph, v) -> VertexSet:
    """The set ``{i : v_i >= 0}``."""
    return VertexSet.from_indicator(g, np.asarray(v) >= 0)


def ambiguous_entries(v, tol: float = BOUNDARY_TOL) -> list[int]:
    """Indices whose sign is too close to zero to trust."""
    return np.flatnonzero(np.abs(np.asarray(v)) <= tol).tolist()


@dataclass(frozen=True)
class SpectralPredicates:
    """Structural eigenvalue facts about M and Mn, each evaluated as a boolean.

    Every field is True when the corresponding statement holds on the given
    graph (implications with a false premise count as holding).
    """

    interlacing: bool
    rightmost_M_nonnegative: bool
    rightmost_M_zero_iff_complete_multipartite: bool
    zero_simple_in_M_iff_A_nonsingular: bool
    zero_simple_in_Mnorm_iff_Anorm_nonsingular: bool
    Mnorm_spectrum_in_unit_interval: bool
    one_not_eigenvalue_if_connected: bool
    minus_one_not_eigenvalue_if_nonbipartite: bool
    m_G_simple_if_d_not_eigenvector: bool
    inertia_M_equals_Mnorm: bool
    # context, not predicates
    minus_one_is_eigenvalue: bool = False
    rightmost_M: float = 0.0
    threshold: float = 1e-8

    @property
    def all_hold(self) -> bool:
        return all(v for k, v in asdict(self).items() if isinstance(v, bool) and k != "minus_one_is_eigenvalue")

    def as_dict(self) -> dict:
        return asdict(self)


def spectral_predicates(g: Graph, tol: float = 1e-8, method: str = "lapack") -> SpectralPredicates:
    _check_connected(g, False)
    A = adjacency_matrix(g)
    M = modularity_matrix(g)
    An = normalized_adjacency(g)
    Mn = normalized_modularity_matrix(g)
    alpha = eig_sym(A, method=method).values
    m = eig_sym(M, method=method).values
    a_n = eig_sym(An, method=method).values
    mu = eig_sym(Mn, method=method).values
    thr_M = zero_threshold(M, tol)
    thr_Mn = zero_threshold(Mn, tol)
    thr_A = zero_threshold(A, tol)

    n = g.n
    chain = np.empty(2 * n)
    chain[0::2] = alpha
    chain[1::2] = m
    interlacing = bool(np.all(np.diff(chain) <= tol))

    structure = classify_structure(g)
    rightmost = float(m[0])

    zeros_M = int(np.sum(np.abs(m) <= thr_M))
    A_nonsingular = bool(np.min(np.abs(alpha)) > thr_A)
    zeros_Mn = int(np.sum(np.abs(mu) <= thr_Mn))
    An_nonsingular = bool(np.min(np.abs(a_n)) > zero_threshold(An, tol))

    has_one = bool(np.any(np.abs(mu - 1) <= tol))
    has_minus_one = bool(np.any(np.abs(mu + 1) <= tol))

    d = g.degree_vector
    Ad = A @ d
    d_is_eigvec = bool(np.linalg.norm(Ad - (d @ Ad) / (d @ d) * d) <= thr_A * np.linalg.norm(d))
    mg = algebraic_modularity(g, tol=tol, method=method)

    return SpectralPredicates(
        interlacing=interlacing,
        rightmost_M_nonnegative=rightmost >= -thr_M,
        rightmost_M_zero_iff_complete_multipartite=(abs(rightmost) <= thr_M) == structure.is_complete_multipartite,
        zero_simple_in_M_iff_A_nonsingular=(zeros_M == 1) == A_nonsingular,
        zero_simple_in_Mnorm_iff_Anorm_nonsingular=(zeros_Mn == 1) == An_nonsingular,
        Mnorm_spectrum_in_unit_interval=bool(np.all(np.abs(mu) <= 1 + tol)),
        one_not_eigenvalue_if_connected=not has_one,
        minus_one_not_eigenvalue_if_nonbipartite=is_bipartite(g) or not has_minus_one,
        m_G_simple_if_d_not_eigenvector=d_is_eigvec or mg.is_simple,
        inertia_M_equals_Mnorm=(
            int(np.sum(m > thr_M)) == int(np.sum(mu > thr_Mn))
            and int(np.sum(m < -thr_M)) == int(np.sum(mu < -thr_Mn))
        ),
        minus_one_is_eigenvalue=has_minus_one,
        rightmost_M=rightmost,
        threshold=thr_M,
    )
