"""Certificates for cut-modularity bounds and for modules found by nodal domains.

Each function evaluates one inequality on a concrete graph and eigenpair
and returns a :class:`BoundCertificate`: whether the hypothesis holds, the
numbers that went into deciding it, the resulting bound values and a
verdict. A certificate only *claims* its conclusion when the verdict is
``CERTIFIED``; checking the claim against exact optima is the job of
:func:`modbounds.oracle.verify_bounds`.

Lower and upper bounds for the normalized cut-modularity ``q_ncut``:

* ``simple_cheeger``: ``1 - 2 sqrt(1 - mu1^2) <= q_ncut <= mu1`` for
  non-star graphs, ``mu1`` the rightmost eigenvalue of Mn.
* ``perturbation_cheeger``: ``1 - 4 r^4 (1 - mu) <= q_ncut`` where ``r``
  measures how far the scaled eigenvector is from a two-valued step.
* ``laplacian_cheeger``: Cheeger's inequality with Chung's upper bound,
  ``lambda2 / 2 <= h_G <= sqrt(lambda2 (2 - lambda2))``; the upper bound
  becomes the trivial ``h_G <= 1`` once ``lambda2 > 1``.

Sufficient conditions for ``Q(S) > 0`` where ``S = {i : v_i >= 0}``:

* ``module_cert_a``: ``mu > (vol S^2 + vol S̄^2) / vol V * max_i v_i^2 / d_i``.
* ``module_cert_b``: ``mu + 1 > 4 vol S vol S̄ / vol V^2 / cos^2 theta``,
  theta the angle between ``|v|`` and ``sqrt(d)``.
* ``angle_corollary``: ``mu > tan^2 theta``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (
    DegenerateSideError,
    MuOutOfRangeError,
    NonPositiveMuError,
    NotUnitNormError,
    NotZeroSumError,
    ZeroCosError,
    ZeroEntryError,
)
from .graph import Graph, StructureKind, VertexSet, classify_structure, is_connected
from .spectral import (
    BOUNDARY_TOL,
    ambiguous_entries,
    laplacian_lambda2,
    nodal_domain,
    normalized_modularity_matrix,
)

__all__ = [
    "CertName",
    "Verdict",
    "BoundCertificate",
    "PerturbationData",
    "AngleData",
    "positive_part_sum",
    "simple_cheeger",
    "laplacian_cheeger",
    "perturbation_data",
    "perturbation_cheeger",
    "module_cert_a",
    "angle_data",
    "module_cert_b",
    "angle_corollary",
    "certify_eigenpair",
    "MU_ZERO",
]

# eigenvalues at or below this are treated as zero
MU_ZERO = 1e-8
# eigenpair residual accepted as "Mn v = mu v"
EIGEN_RESIDUAL_TOL = 1e-8


class CertName(enum.Enum):
    LAPLACIAN_CHEEGER = "LaplacianCheeger"
    SIMPLE_CHEEGER = "SimpleCheeger"
    PERTURBATION_CHEEGER = "PerturbationCheeger"
    MODULE_CERT_A = "ModuleCertA"
    MODULE_CERT_B = "ModuleCertB"
    ANGLE_COROLLARY = "AngleCorollary"


class Verdict(enum.Enum):
    CERTIFIED = "Certified"
    HYPOTHESIS_FAILED = "HypothesisFailed"
    INCONCLUSIVE = "Inconclusive"


def _is_scalar(x) -> bool:
    return isinstance(x, (int, float, np.floating, np.integer)) and not isinstance(x, bool)


@dataclass(frozen=True)
class BoundCertificate:
    name: CertName
    hypothesis_ok: bool
    hypothesis_detail: dict
    bounds: dict
    verdict: Verdict
    nodal_set: tuple[int, ...] | None = None
    verified_against_oracle: bool | None = None
    note: str = ""

    def __post_init__(self):
        if self.verdict is Verdict.CERTIFIED and not self.hypothesis_ok:
            raise ValueError(f"{self.name.value}: certified without hypothesis")
        for key, val in list(self.hypothesis_detail.items()) + list(self.bounds.items()):
            if _is_scalar(val) and not math.isfinite(val):
                raise ValueError(f"{self.name.value}: non-finite scalar {key}={val}")

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED

    def with_verification(self, ok: bool | None) -> "BoundCertificate":
        return replace(self, verified_against_oracle=ok)

    def as_dict(self) -> dict:
        return {
            "name": self.name.value,
            "verdict": self.verdict.value,
            "hypothesis_ok": self.hypothesis_ok,
            "hypothesis_detail": dict(self.hypothesis_detail),
            "bounds": dict(self.bounds),
            "nodal_set": None if self.nodal_set is None else list(self.nodal_set),
            "verified_against_oracle": self.verified_against_oracle,
            "note": self.note,
        }


def positive_part_sum(alphas, tol: float = 1e-10) -> float:
    """Sum of the positive entries of a zero-sum vector.

    For such vectors this is half the 1-norm; the zero-sum precondition is
    checked relative to the 1-norm.
    """
    a = np.asarray(alphas, dtype=float)
    l1 = float(np.abs(a).sum())
    total = float(a.sum())
    if abs(total) > tol * max(l1, np.finfo(float).tiny):
        raise NotZeroSumError(f"entries sum to {total:.3e} (1-norm {l1:.3e})")
    pos = float(a[a > 0].sum())
    assert abs(pos - 0.5 * l1) <= tol * max(l1, 1.0) + abs(total)
    return pos


def _eigen_residual(g: Graph, v, mu) -> float:
    v = np.asarray(v, dtype=float)
    return float(np.linalg.norm(normalized_modularity_matrix(g) @ v - mu * v))


# ---------------------------------------------------------------- Cheeger-type


def simple_cheeger(g: Graph, mu1: float, tol: float = 1e-8) -> BoundCertificate:
    """Two-sided bound on ``q_ncut`` from the rightmost eigenvalue of Mn."""
    mu1 = float(mu1)
    if not -1 - tol <= mu1 <= 1 + tol:
        raise MuOutOfRangeError(f"mu1={mu1} outside [-1, 1]")
    m = min(max(mu1, -1.0), 1.0)
    structure = classify_structure(g)
    is_star = structure.kind is StructureKind.STAR
    lower = 1.0 - 2.0 * math.sqrt(max(0.0, 1.0 - m * m))
    return BoundCertificate(
        name=CertName.SIMPLE_CHEEGER,
        hypothesis_ok=not is_star,
        hypothesis_detail={"mu1": mu1, "structure": structure.kind.value, "is_star": is_star},
        bounds={"lower": lower, "upper": mu1},
        verdict=Verdict.HYPOTHESIS_FAILED if is_star else Verdict.CERTIFIED,
        note="graph is a star" if is_star else "",
    )


def laplacian_cheeger(g: Graph, lambda2: float | None = None, allow_disconnected: bool = False) -> BoundCertificate:
    """Conductance bounds from the normalized Laplacian's ``lambda2``."""
    connected = is_connected(g)
    if lambda2 is None:
        lambda2 = laplacian_lambda2(g, allow_disconnected=allow_disconnected)
    lam = min(max(float(lambda2), 0.0), 2.0)
    # the refined bound decreases past lambda2 = 1; there h <= 1 is the better claim
    refined = lam <= 1.0
    return BoundCertificate(
        name=CertName.LAPLACIAN_CHEEGER,
        hypothesis_ok=True,
        hypothesis_detail={"lambda2": float(lambda2), "connected": connected, "refined_upper_applies": refined},
        bounds={
            "lower": lam / 2.0,
            "upper": math.sqrt(lam * (2.0 - lam)) if refined else 1.0,
            "upper_classic": math.sqrt(2.0 * lam),
        },
        verdict=Verdict.CERTIFIED,
        note="" if connected else "disconnected graph, h_G = 0",
    )


@dataclass(frozen=True)
class PerturbationData:
    """Quantities measuring how close ``D^{-1/2} v`` is to a two-valued step.

    ``x = p 1_S + q 1_S̄`` is the degree-weighted least-squares step fit to
    ``z = D^{-1/2} v`` on the nodal domain ``S``; ``r`` is the smallest
    number with ``1/r <= z_i / x_i <= r`` for all ``i``.
    """

    z: np.ndarray
    S: VertexSet
    p: float
    q: float
    c: float
    s: int
    s_bar: int
    nu: int
    r: float
    C: float
    identity_residuals: tuple[float, float] = field(default=(0.0, 0.0))


def perturbation_data(g: Graph, v, zero_tol: float = BOUNDARY_TOL, identity_tol: float = 1e-10) -> PerturbationData:
    v = np.asarray(v, dtype=float)
    if np.any(np.abs(v) <= zero_tol):
        raise ZeroEntryError(f"eigenvector has zero entries at {ambiguous_entries(v, zero_tol)}")
    S = nodal_domain(g, v)
    if not S.is_proper:
        raise DegenerateSideError("nodal domain is empty or the whole vertex set")
    delta = g.sqrt_degrees
    d = g.degree_vector
    z = v / delta
    s = S.volume
    s_bar = g.volume - s
    nu = g.volume
    # d_i z_i = delta_i v_i sums to zero, so the positive part is sum_{S} d_i z_i
    c = positive_part_sum(delta * v)
    p = c / s
    q = -c / s_bar
    if p == 0.0 or q == 0.0:
        raise ZeroEntryError("step vector has a zero value")
    x = np.where(v >= 0, p, q)
    ratio = z / x
    r = float(np.max(np.maximum(ratio, 1.0 / ratio)))

    res1 = abs((p - q) - c * nu / (s * s_bar))
    res2 = abs((p * p * s + q * q * s_bar) - c * c * nu / (s * s_bar))
    scale = max(1.0, abs(p - q), p * p * s + q * q * s_bar)
    if max(res1, res2) > identity_tol * scale:
        raise ArithmeticError(f"step identities violated: residuals {res1:.3e}, {res2:.3e}")
    z.setflags(write=False)
    return PerturbationData(z, S, p, q, c, s, s_bar, nu, r, 4.0 * r**4, (res1, res2))


def perturbation_cheeger(g: Graph, v, mu: float) -> BoundCertificate:
    """Lower bound ``1 - 4 r^4 (1 - mu) <= q_ncut`` from a near-step eigenvector."""
    mu = float(mu)
    v = np.asarray(v, dtype=float)
    residual = _eigen_residual(g, v, mu)
    orth = float(abs(g.sqrt_degrees @ v))
    detail = {"mu": mu, "eigen_residual": residual, "delta_dot_v": orth}
    try:
        data = perturbation_data(g, v)
    except (ZeroEntryError, DegenerateSideError, NotZeroSumError) as exc:
        return BoundCertificate(
            name=CertName.PERTURBATION_CHEEGER,
            hypothesis_ok=False,
            hypothesis_detail=detail,
            bounds={},
            verdict=Verdict.INCONCLUSIVE,
            note=f"{type(exc).__name__}: {exc}",
        )
    detail.update(r=data.r, C=data.C, p=data.p, q=data.q, c=data.c, vol_S=data.s, vol_S_bar=data.s_bar)
    ok = residual <= EIGEN_RESIDUAL_TOL and orth <= 1e-8
    return BoundCertificate(
        name=CertName.PERTURBATION_CHEEGER,
        hypothesis_ok=ok,
        hypothesis_detail=detail,
        bounds={"lower": 1.0 - data.C * (1.0 - mu)},
        verdict=Verdict.CERTIFIED if ok else Verdict.INCONCLUSIVE,
        nodal_set=data.S.members,
        note="" if ok else "vector is not an eigenvector orthogonal to sqrt(d)",
    )


# ---------------------------------------------------------------- modules


def _require_positive(mu: float) -> None:
    if not mu > MU_ZERO:
        raise NonPositiveMuError(f"mu={mu} is not positive (threshold {MU_ZERO})")


def _module_verdict(hyp: bool, residual: float, S: VertexSet) -> tuple[bool, Verdict, str]:
    # a failed inequality claims nothing, so it is reported before the eigenpair checks
    if not S.is_proper:
        return False, Verdict.INCONCLUSIVE, "nodal domain is trivial"
    if not hyp:
        return False, Verdict.HYPOTHESIS_FAILED, ""
    if residual > EIGEN_RESIDUAL_TOL:
        return False, Verdict.INCONCLUSIVE, f"eigen-residual {residual:.2e} too large"
    return True, Verdict.CERTIFIED, ""


def module_cert_a(g: Graph, v, mu: float, norm_tol: float = 1e-8) -> BoundCertificate:
    """Certify ``Q(S) > 0`` from the largest ``v_i^2 / d_i``; ``v`` must be unit."""
    mu = float(mu)
    v = np.asarray(v, dtype=float)
    _require_positive(mu)
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > norm_tol:
        raise NotUnitNormError(f"||v|| = {norm}")
    S = nodal_domain(g, v)
    s, s_bar = S.volume, g.volume - S.volume
    max_ratio = float(np.max(v * v / g.degree_vector))
    threshold = (s * s + s_bar * s_bar) / g.volume * max_ratio
    residual = _eigen_residual(g, v, mu)
    ok, verdict, note = _module_verdict(mu > threshold, residual, S)
    return BoundCertificate(
        name=CertName.MODULE_CERT_A,
        hypothesis_ok=ok,
        hypothesis_detail={
            "mu": mu,
            "threshold": threshold,
            "max_v2_over_d": max_ratio,
            "vol_S": s,
            "vol_S_bar": s_bar,
            "eigen_residual": residual,
            "boundary_ambiguous": len(ambiguous_entries(v)),
        },
        bounds={"margin": mu - threshold},
        verdict=verdict,
        nodal_set=S.members,
        note=note,
    )


@dataclass(frozen=True)
class AngleData:
    """Decomposition of ``D^{1/2} 1_S`` along ``sqrt(d)``, ``v`` and the rest."""

    cos_theta: float
    alpha: float
    beta: float
    gamma2: float
    beta_direct: float


def angle_data(g: Graph, v) -> AngleData:
    v = np.asarray(v, dtype=float)
    delta = g.sqrt_degrees
    vnorm = float(np.linalg.norm(v))
    if vnorm == 0.0:
        raise ZeroCosError("zero vector")
    cos_theta = float(delta @ np.abs(v)) / (vnorm * math.sqrt(g.volume))
    if cos_theta <= 0.0:
        raise ZeroCosError("|v| is orthogonal to sqrt(d)")
    S = nodal_domain(g, v)
    s_vec = np.where(v >= 0, delta, 0.0)
    alpha = S.volume / math.sqrt(g.volume)
    beta_direct = float(v @ s_vec) / vnorm
    # delta^T v = 0 makes v^T s half of sum_i delta_i |v_i|
    positive_part_sum(delta * v, tol=1e-8)
    beta = 0.5 * cos_theta * math.sqrt(g.volume)
    gamma2 = S.volume * (g.volume - S.volume) / g.volume - beta**2
    if gamma2 < -1e-10 * max(1.0, g.volume):
        raise ArithmeticError(f"negative gamma^2 = {gamma2}")
    return AngleData(cos_theta, alpha, beta, gamma2, beta_direct)


def _angle_common(g: Graph, v, mu: float):
    mu = float(mu)
    v = np.asarray(v, dtype=float)
    _require_positive(mu)
    return mu, v


def module_cert_b(g: Graph, v, mu: float) -> BoundCertificate:
    """Certify ``Q(S) > 0`` from the angle between ``|v|`` and ``sqrt(d)``.

    Any scaling of ``v`` is accepted. The weaker ``mu > tan^2 theta`` test is
    evaluated as well; the verdict is Certified if either condition holds.
    """
    mu, v = _angle_common(g, v, mu)
    S = nodal_domain(g, v)
    residual = _eigen_residual(g, v / max(np.linalg.norm(v), np.finfo(float).tiny), mu)
    try:
        ad = angle_data(g, v)
    except (ZeroCosError, NotZeroSumError) as exc:
        return BoundCertificate(
            CertName.MODULE_CERT_B, False, {"mu": mu}, {}, Verdict.INCONCLUSIVE,
            nodal_set=S.members, note=f"ZeroCosError: {exc}",
        )
    s, s_bar = S.volume, g.volume - S.volume
    thm_rhs = 4.0 * s * s_bar / g.volume**2 / ad.cos_theta**2
    tan2 = 1.0 / ad.cos_theta**2 - 1.0
    hyp_thm = mu + 1.0 > thm_rhs
    hyp_cor = mu > tan2
    ok, verdict, note = _module_verdict(hyp_thm or hyp_cor, residual, S)
    return BoundCertificate(
        name=CertName.MODULE_CERT_B,
        hypothesis_ok=ok,
        hypothesis_detail={
            "mu": mu,
            "cos_theta": ad.cos_theta,
            "tan2_theta": tan2,
            "theorem_rhs": thm_rhs,
            "theorem_holds": hyp_thm,
            "corollary_holds": hyp_cor,
            "alpha": ad.alpha,
            "beta": ad.beta,
            "beta_direct": ad.beta_direct,
            "gamma2": ad.gamma2,
            "vol_S": s,
            "vol_S_bar": s_bar,
            "eigen_residual": residual,
            "boundary_ambiguous": len(ambiguous_entries(v / np.linalg.norm(v))),
        },
        bounds={"margin": mu + 1.0 - thm_rhs},
        verdict=verdict,
        nodal_set=S.members,
        note=note,
    )


def angle_corollary(g: Graph, v, mu: float) -> BoundCertificate:
    """Certify ``Q(S) > 0`` when ``mu > tan^2 theta``."""
    mu, v = _angle_common(g, v, mu)
    S = nodal_domain(g, v)
    residual = _eigen_residual(g, v / max(np.linalg.norm(v), np.finfo(float).tiny), mu)
    try:
        ad = angle_data(g, v)
    except (ZeroCosError, NotZeroSumError) as exc:
        return BoundCertificate(
            CertName.ANGLE_COROLLARY, False, {"mu": mu}, {}, Verdict.INCONCLUSIVE,
            nodal_set=S.members, note=f"ZeroCosError: {exc}",
        )
    tan2 = 1.0 / ad.cos_theta**2 - 1.0
    ok, verdict, note = _module_verdict(mu > tan2, residual, S)
    return BoundCertificate(
        name=CertName.ANGLE_COROLLARY,
        hypothesis_ok=ok,
        hypothesis_detail={"mu": mu, "cos_theta": ad.cos_theta, "tan2_theta": tan2, "eigen_residual": residual},
        bounds={"margin": mu - tan2},
        verdict=verdict,
        nodal_set=S.members,
        note=note,
    )


def _failed(name: CertName, mu: float, exc: Exception) -> BoundCertificate:
    return BoundCertificate(
        name, False, {"mu": float(mu)}, {}, Verdict.HYPOTHESIS_FAILED,
        note=f"{type(exc).__name__}: {exc}",
    )


def certify_eigenpair(
    g: Graph,
    v,
    mu: float,
    mu1: float | None = None,
    lambda2: float | None = None,
) -> list[BoundCertificate]:
    """All certificates for one eigenpair of Mn, in a fixed order.

    ``mu1`` (rightmost eigenvalue of Mn) feeds the two-sided bound and
    defaults to ``max(mu, 0)``; ``lambda2`` is computed when omitted. A
    nonpositive ``mu`` turns the module certificates into HypothesisFailed
    records instead of raising.
    """
    if mu1 is None:
        mu1 = max(float(mu), 0.0)
    certs = [laplacian_cheeger(g, lambda2), simple_cheeger(g, mu1), perturbation_cheeger(g, v, mu)]
    unit = np.asarray(v, dtype=float) / np.linalg.norm(v)
    for name, fn in (
        (CertName.MODULE_CERT_A, module_cert_a),
        (CertName.MODULE_CERT_B, module_cert_b),
        (CertName.ANGLE_COROLLARY, angle_corollary),
    ):
        try:
            certs.append(fn(g, unit, mu))
        except NonPositiveMuError as exc:
            certs.append(_failed(name, mu, exc))
    return certs
