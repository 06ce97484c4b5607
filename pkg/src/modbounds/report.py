"""End-to-end analysis of one graph and its JSON / text serialisation."""

from __future__ import annotations

import datetime as _dt
import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from . import __version__
from .certificates import MU_ZERO, certify_eigenpair
from .graph import Graph, classify_structure, is_bipartite, is_connected
from .linalg import eig_sym
from .measures import cut_functionals
from .oracle import MAX_CUT_N, MAX_PARTITION_N, brute_force_cuts, verify_bounds
from .spectral import (
    BOUNDARY_TOL,
    MATRICES,
    algebraic_modularity,
    ambiguous_entries,
    laplacian_lambda2,
    nodal_domain,
    normalized_algebraic_modularity,
)

__all__ = [
    "SCHEMA_VERSION",
    "AnalysisReport",
    "analyze",
    "certify",
    "spectrum_table",
    "to_jsonable",
    "dumps",
    "render_text",
]

SCHEMA_VERSION = 1
DEFAULT_ORACLE_CAP = 20

# the direction each matrix is known to have as an eigenvector
_KERNEL_DIRECTION = {"M": "ones", "L": "ones", "Mnorm": "delta", "Lnorm": "delta", "Anorm": "delta"}


def to_jsonable(obj: Any) -> Any:
    """Convert to plain JSON types; Fractions become ``{num, den, float}``."""
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator, "float": float(obj)}
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else str(x)
    if isinstance(obj, np.ndarray):
        return [to_jsonable(x) for x in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if hasattr(obj, "as_dict"):
        return to_jsonable(obj.as_dict())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), indent=2) + "\n"


@dataclass
class AnalysisReport:
    """Everything computed for one graph, already in JSON-ready form."""

    graph: dict
    spectra: dict
    invariants: dict
    nodal_cut: dict | None
    certificates: list
    oracle: dict | None
    verification: dict | None
    tolerances: dict
    tool_version: str = __version__
    schema: int = SCHEMA_VERSION
    timestamp: str | None = None

    def as_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisReport":
        return cls(**d)

    def to_json(self) -> str:
        return dumps(self.as_dict())

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))

    @property
    def has_violations(self) -> bool:
        return bool(self.verification) and not self.verification["ok"]


def _graph_summary(g: Graph) -> dict:
    connected = is_connected(g)
    summary = {
        "n": g.n,
        "edges": g.n_edges,
        "volume": g.volume,
        "connected": connected,
        "bipartite": is_bipartite(g),
        "classification": None,
        "parts": None,
    }
    if connected:
        st = classify_structure(g)
        summary["classification"] = st.kind.value
        summary["parts"] = None if st.parts is None else [list(p) for p in st.parts]
    return summary


def _deflated_pair(g: Graph, mu_G, index: int):
    spec = mu_G.spectrum
    if not 0 <= index < g.n - 1:
        raise IndexError(f"eigenvector index {index} outside 0..{g.n - 2}")
    return float(spec.values[index]), spec.vectors[:, index]


def certify(g: Graph, index: int = 0, tol: float = 1e-8) -> list:
    """Certificates for the ``index``-th eigenpair of Mn orthogonal to sqrt(d)."""
    mu_G = normalized_algebraic_modularity(g, tol=tol)
    mu, v = _deflated_pair(g, mu_G, index)
    mu1 = max(0.0, mu_G.value)
    return certify_eigenpair(g, v, mu, mu1=mu1, lambda2=laplacian_lambda2(g))


def analyze(
    g: Graph,
    tol: float = 1e-8,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    force_oracle: bool = False,
    eigen_index: int = 0,
    timestamp: bool = True,
) -> AnalysisReport:
    """Run the full pipeline: spectra, nodal cut, certificates, oracle."""
    spec_M = eig_sym(MATRICES["M"](g))
    spec_Mn = eig_sym(MATRICES["Mnorm"](g))
    m_G = algebraic_modularity(g, tol=tol)
    mu_G = normalized_algebraic_modularity(g, tol=tol)
    mu1 = float(spec_Mn.values[0])
    lam2 = laplacian_lambda2(g)

    mu, v = _deflated_pair(g, mu_G, eigen_index)
    S = nodal_domain(g, v)
    nodal = None
    if S.is_proper:
        nodal = cut_functionals(g, S).as_dict()
        nodal["boundary_ambiguous"] = ambiguous_entries(v)
        nodal["eigenvalue"] = mu
        nodal["eigen_index"] = eigen_index

    certs = certify_eigenpair(g, v, mu, mu1=mu1, lambda2=lam2)

    oracle = verification = None
    if g.n <= oracle_cap or force_oracle:
        res = brute_force_cuts(g, max_n=MAX_CUT_N, partitions=g.n <= MAX_PARTITION_N)
        rep = verify_bounds(g, certs, res, tol=tol)
        certs = rep.certificates
        oracle = res.as_dict()
        verification = rep.as_dict()

    report = AnalysisReport(
        graph=_graph_summary(g),
        spectra={
            "M": {"eigenvalues": spec_M.values, "max_residual": spec_M.max_residual},
            "Mnorm": {"eigenvalues": spec_Mn.values, "max_residual": spec_Mn.max_residual},
        },
        invariants={
            "m_G": m_G.value,
            "m_G_simple": m_G.is_simple,
            "mu_G": mu_G.value,
            "mu_G_simple": mu_G.is_simple,
            "mu_1": mu1,
            "lambda_2": lam2,
        },
        nodal_cut=nodal,
        certificates=[c.as_dict() for c in certs],
        oracle=oracle,
        verification=verification,
        tolerances={
            "tol": tol,
            "boundary": BOUNDARY_TOL,
            "mu_zero": MU_ZERO,
            "oracle_cap": oracle_cap,
            "zero_threshold_M": m_G.threshold,
            "zero_threshold_Mnorm": mu_G.threshold,
        },
        timestamp=_dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds") if timestamp else None,
    )
    # normalise once so the in-memory report equals its JSON round trip
    return AnalysisReport.from_dict(json.loads(dumps(report.as_dict())))


def spectrum_table(g: Graph, matrix: str = "Mnorm") -> dict:
    """Eigenvalues of one of the graph matrices, with the known eigenvector marked."""
    try:
        build = MATRICES[matrix]
    except KeyError:
        raise ValueError(f"unknown matrix {matrix!r}; choose from {sorted(MATRICES)}") from None
    X = build(g)
    spec = eig_sym(X)
    kernel = None
    direction = _KERNEL_DIRECTION.get(matrix)
    if direction is not None:
        w = np.ones(g.n) if direction == "ones" else np.array(g.sqrt_degrees)
        w /= np.linalg.norm(w)
        lam = float(w @ X @ w)
        index = int(np.argmin(np.abs(spec.values - lam)))
        kernel = {"vector": direction, "eigenvalue": lam, "index": index}
    return {
        "matrix": matrix,
        "n": g.n,
        "eigenvalues": spec.values,
        "max_residual": spec.max_residual,
        "known_eigenvector": kernel,
    }


def _fmt(x) -> str:
    if isinstance(x, dict) and "num" in x:
        return f"{x['num']}/{x['den']} ({x['float']:.6g})" if x["den"] != 1 else str(x["num"])
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def render_text(report: AnalysisReport) -> str:
    r = report
    gs = r.graph
    lines = [
        f"graph: n={gs['n']} edges={gs['edges']} vol={gs['volume']} "
        f"class={gs['classification']} connected={gs['connected']} bipartite={gs['bipartite']}",
        "invariants: " + "  ".join(f"{k}={_fmt(v)}" for k, v in r.invariants.items()),
    ]
    if r.nodal_cut:
        nc = r.nodal_cut
        lines.append(
            f"nodal cut S={nc['S']}: Q={_fmt(nc['Q'])} q_norm={_fmt(nc['q_norm'])} "
            f"q_rel={_fmt(nc['q_rel'])} h={_fmt(nc['conductance'])}"
            + (f"  ambiguous={nc['boundary_ambiguous']}" if nc["boundary_ambiguous"] else "")
        )
    lines.append("certificates:")
    for c in r.certificates:
        b = " ".join(f"{k}={_fmt(v)}" for k, v in c["bounds"].items())
        ver = {None: "", True: " [oracle ok]", False: " [ORACLE VIOLATION]"}[c["verified_against_oracle"]]
        lines.append(f"  {c['name']:<20} {c['verdict']:<17} {b}{ver}" + (f"  ({c['note']})" if c["note"] else ""))
    if r.oracle:
        o = r.oracle
        lines.append(
            "oracle: " + "  ".join(f"{k}={_fmt(o[k]['value'])} at {o[k]['set']}" for k in ("q_cut", "q_rcut", "q_ncut", "h_G"))
        )
        if o.get("multiway"):
            mw = o["multiway"]
            lines.append(f"  best partition q={_fmt(mw['best_q'])} k={mw['k']} all_modules={mw['all_modules']}")
    if r.verification:
        v = r.verification
        lines.append(f"verification: {'ok' if v['ok'] else 'VIOLATIONS'} ({v['checked']} claims checked)")
    return "\n".join(lines) + "\n"
