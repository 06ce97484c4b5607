"""Dense symmetric eigensolvers.

Two routes give the same :class:`Spectrum`:

* ``"lapack"`` calls :func:`numpy.linalg.eigh`;
* ``"ql"`` is a self-contained Householder tridiagonalisation followed by
  implicit QL iteration with Wilkinson-type shifts. It is slower and kept
  as an independent cross-check of the LAPACK path.

Eigenvalues are sorted in nonincreasing order and each eigenvector's sign
is fixed so that its entry of largest magnitude is positive (lowest index
on ties), which makes nodal domains reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .errors import MatrixTooLargeError, NoConvergenceError

__all__ = [
    "Spectrum",
    "eig_sym",
    "tridiagonalize",
    "tridiagonal_ql",
    "canonical_sign",
    "zero_threshold",
    "MAX_ORDER",
]

MAX_ORDER = 2000


@dataclass(frozen=True)
class Spectrum:
    """Eigenpairs of a symmetric matrix, largest eigenvalue first.

    ``vectors[:, k]`` is the unit eigenvector of ``values[k]`` and
    ``residuals[k]`` is ``||A v - lambda v||_2`` for that pair.
    """

    values: np.ndarray
    vectors: np.ndarray
    residuals: np.ndarray

    def __len__(self):
        return len(self.values)

    def pair(self, k: int) -> tuple[float, np.ndarray]:
        return float(self.values[k]), self.vectors[:, k]

    @property
    def max_residual(self) -> float:
        return float(self.residuals.max(initial=0.0))

    @property
    def orthogonality_defect(self) -> float:
        """``max |V^T V - I|`` over all entries."""
        V = self.vectors
        return float(np.abs(V.T @ V - np.eye(V.shape[1])).max(initial=0.0))

    def count_above(self, threshold: float) -> int:
        return int(np.sum(self.values > threshold))

    def multiplicity(self, k: int, gap: float) -> int:
        """Number of eigenvalues within ``gap`` of ``values[k]``."""
        return int(np.sum(np.abs(self.values - self.values[k]) <= gap))


def zero_threshold(mat: np.ndarray, tol: float = 1e-8) -> float:
    """Absolute zero threshold for a matrix: ``tol`` times its max-norm."""
    scale = float(np.abs(mat).max(initial=0.0))
    return tol * (scale if scale > 0 else 1.0)


def canonical_sign(v: np.ndarray, rtol: float = 1e-9) -> np.ndarray:
    a = np.abs(v)
    top = a.max(initial=0.0)
    if top == 0:
        return v
    k = int(np.flatnonzero(a >= top * (1 - rtol))[0])
    return -v if v[k] < 0 else v


def tridiagonalize(A: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Householder reduction ``A = Q T Q^T``.

    Returns ``(diag, subdiag, Q)`` where ``subdiag[i] = T[i+1, i]``.
    """
    T = np.array(A, dtype=float, copy=True)
    n = T.shape[0]
    Q = np.eye(n)
    for k in range(n - 2):
        x = T[k + 1 :, k]
        xnorm = np.linalg.norm(x)
        if xnorm == 0.0 or np.linalg.norm(x[1:]) == 0.0:
            continue
        alpha = -math.copysign(xnorm, x[0])
        u = x.copy()
        u[0] -= alpha
        u /= np.linalg.norm(u)
        # T <- H T H with H = I - 2 u u^T acting on rows/cols k+1..n-1
        T[k + 1 :, :] -= 2.0 * np.outer(u, u @ T[k + 1 :, :])
        T[:, k + 1 :] -= 2.0 * np.outer(T[:, k + 1 :] @ u, u)
        Q[:, k + 1 :] -= 2.0 * np.outer(Q[:, k + 1 :] @ u, u)
    diag = np.diag(T).copy()
    sub = np.diag(T, -1).copy()
    return diag, sub, Q


def tridiagonal_ql(diag, sub, Z=None, max_iter=None):
    """Implicit QL on a symmetric tridiagonal matrix.

    ``Z`` (default identity) is overwritten with ``Z`` times the
    accumulated rotations, so passing the Householder ``Q`` yields
    eigenvectors of the original matrix. Eigenvalues come back unsorted.
    """
    d = np.array(diag, dtype=float, copy=True)
    n = len(d)
    e = np.zeros(n)
    e[: n - 1] = sub
    Z = np.eye(n) if Z is None else np.array(Z, dtype=float, copy=True)
    if max_iter is None:
        max_iter = 50 * max(n, 1)
    eps2 = np.finfo(float).eps ** 2
    safmin = np.finfo(float).tiny
    iters = 0
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                # LAPACK dsteqr split test; safmin guards subnormal diagonals
                if e[m] * e[m] <= eps2 * abs(d[m]) * abs(d[m + 1]) + safmin:
                    break
                m += 1
            if m == l:
                break
            iters += 1
            if iters > max_iter:
                raise NoConvergenceError(f"QL iteration exceeded {max_iter} steps")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                zi1 = Z[:, i + 1].copy()
                Z[:, i + 1] = s * Z[:, i] + c * zi1
                Z[:, i] = c * Z[:, i] - s * zi1
                i -= 1
            else:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return d, Z


def eig_sym(
    mat: np.ndarray,
    tol: float = 1e-12,
    method: str = "lapack",
    max_order: int = MAX_ORDER,
) -> Spectrum:
    """Full eigendecomposition of a real symmetric matrix.

    Raises :class:`NoConvergenceError` if the solver fails or if some pair
    has residual above ``tol * n * max|a_ij|``.
    """
    A = np.asarray(mat, dtype=float)
    n = A.shape[0]
    if A.ndim != 2 or A.shape[1] != n:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if n > max_order:
        raise MatrixTooLargeError(f"order {n} exceeds cap {max_order}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    A = 0.5 * (A + A.T)
    # work at unit max-norm so subnormal or huge entries neither stall QL
    # nor overflow the residuals
    scale = float(np.abs(A).max(initial=0.0)) or 1.0
    As = A / scale
    if method == "lapack":
        try:
            w, V = np.linalg.eigh(As)
        except np.linalg.LinAlgError as exc:
            raise NoConvergenceError(str(exc)) from exc
    elif method == "ql":
        diag, sub, Q = tridiagonalize(As)
        w, V = tridiagonal_ql(diag, sub, Q)
    else:
        raise ValueError(f"unknown method {method!r}")
    order = np.argsort(-w, kind="stable")
    w = w[order]
    V = V[:, order]
    for k in range(n):
        V[:, k] = canonical_sign(V[:, k])
    res_unit = np.linalg.norm(As @ V - V * w, axis=0)
    if n and res_unit.max() > tol * n:
        raise NoConvergenceError(f"relative eigen-residual {res_unit.max():.3e} exceeds {tol * n:.3e}")
    w = w * scale
    res = res_unit * scale
    w.setflags(write=False)
    V.setflags(write=False)
    res.setflags(write=False)
    return Spectrum(w, V, res)
