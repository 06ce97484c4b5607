"""Modularity and conductance of vertex sets, cuts and partitions.

All set functionals here are ratios of integers and are returned as exact
:class:`fractions.Fraction` values. Convert with ``float()`` where needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EmptySideError, NotAPartitionError
from .graph import Graph, VertexSet, e_in, e_out

__all__ = [
    "CutReport",
    "modularity",
    "modularity_from_boundary",
    "partition_modularity",
    "relative_modularity",
    "normalized_modularity",
    "conductance",
    "cut_functionals",
    "sandwich_check",
]


def modularity(g: Graph, S: VertexSet) -> Fraction:
    """Newman-Girvan modularity ``Q(S) = e_in(S) - vol(S)^2 / vol(V)``."""
    q = Fraction(e_in(g, S)) - Fraction(S.volume**2, g.volume)
    # the boundary form must agree exactly; anything else is a bug upstream
    assert q == modularity_from_boundary(g, S)
    return q


def modularity_from_boundary(g: Graph, S: VertexSet) -> Fraction:
    """``Q(S)`` written as ``vol(S) vol(S̄) / vol(V) - e_out(S)``."""
    vol_c = g.volume - S.volume
    return Fraction(S.volume * vol_c, g.volume) - e_out(g, S)


def partition_modularity(g: Graph, parts: Sequence[VertexSet]) -> Fraction:
    """``(1 / vol V) * sum_i Q(S_i)`` for a partition of V."""
    seen = 0
    for p in parts:
        if p.mask & seen:
            raise NotAPartitionError("parts overlap")
        seen |= p.mask
    if seen != (1 << g.n) - 1:
        raise NotAPartitionError("parts do not cover the vertex set")
    return sum((modularity(g, p) for p in parts), Fraction(0)) / g.volume


def _require_proper(g: Graph, S: VertexSet) -> None:
    if not S.is_proper:
        raise EmptySideError("cut functionals need both S and its complement nonempty")


def relative_modularity(g: Graph, S: VertexSet) -> Fraction:
    """``q_rel(S, S̄) = Q(S) n / (|S| |S̄|)``."""
    _require_proper(g, S)
    return modularity(g, S) * g.n / (S.size * (g.n - S.size))


def normalized_modularity(g: Graph, S: VertexSet) -> Fraction:
    """``q_norm(S, S̄) = Q(S) vol V / (vol S vol S̄)``."""
    _require_proper(g, S)
    return modularity(g, S) * g.volume / (S.volume * (g.volume - S.volume))


def conductance(g: Graph, S: VertexSet) -> Fraction:
    """``h(S) = e_out(S) / min(vol S, vol S̄)``."""
    _require_proper(g, S)
    return Fraction(e_out(g, S), min(S.volume, g.volume - S.volume))


@dataclass(frozen=True)
class CutReport:
    """Every functional of one cut ``{S, S̄}``."""

    S: VertexSet
    Q: Fraction
    q_rel: Fraction
    q_norm: Fraction
    conductance: Fraction
    e_in: int
    e_out: int
    vol_S: int

    @property
    def is_module(self) -> bool:
        return self.Q > 0

    def as_dict(self) -> dict:
        return {
            "S": list(self.S.members),
            "Q": self.Q,
            "q_rel": self.q_rel,
            "q_norm": self.q_norm,
            "conductance": self.conductance,
            "e_in": self.e_in,
            "e_out": self.e_out,
            "vol_S": self.vol_S,
        }


def cut_functionals(g: Graph, S: VertexSet) -> CutReport:
    _require_proper(g, S)
    Q = modularity(g, S)
    vol_c = g.volume - S.volume
    return CutReport(
        S=S,
        Q=Q,
        q_rel=Q * g.n / (S.size * (g.n - S.size)),
        q_norm=Q * g.volume / (S.volume * vol_c),
        conductance=Fraction(e_out(g, S), min(S.volume, vol_c)),
        e_in=e_in(g, S),
        e_out=e_out(g, S),
        vol_S=S.volume,
    )


def sandwich_check(g: Graph, qcut, qrcut, qncut, tol: float = 1e-12) -> bool:
    """Check the elementary bounds relating the three cut-modularity optima.

    ``2 qrcut / (n d_max) <= qcut <= qrcut / 2`` and
    ``2 qncut / vol V <= qcut <= qncut / 2`` must both hold, up to ``tol``.
    The inputs are expected to be exact optima, e.g. from the oracle.
    """
    qcut, qrcut, qncut = float(qcut), float(qrcut), float(qncut)
    rel = 2 * qrcut / (g.n * g.max_degree) - tol <= qcut <= qrcut / 2 + tol
    norm = 2 * qncut / g.volume - tol <= qcut <= qncut / 2 + tol
    return rel and norm
