"""Exact cut and partition optima by exhaustive enumeration.

Everything here is integer arithmetic; optima are returned as
:class:`fractions.Fraction`. Cut enumeration walks the proper subsets that
contain vertex 0 in Gray-code order (one vertex toggled per step), which
covers every cut ``{S, S̄}`` exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .certificates import BoundCertificate, CertName
from .errors import TooLargeError
from .graph import Graph, VertexSet
from .measures import modularity

__all__ = [
    "Optimum",
    "OracleResult",
    "PartitionResult",
    "VerificationReport",
    "brute_force_cuts",
    "brute_force_partitions",
    "verify_bounds",
    "MAX_CUT_N",
    "MAX_PARTITION_N",
]

MAX_CUT_N = 24
MAX_PARTITION_N = 10


@dataclass(frozen=True)
class Optimum:
    value: Fraction
    argopt: VertexSet
    count: int = 1  # number of cuts {S, S̄} attaining the value

    def as_dict(self) -> dict:
        return {"value": self.value, "set": list(self.argopt.members), "count": self.count}


@dataclass(frozen=True)
class PartitionResult:
    """Best modularity partition of minimal cardinality.

    ``all_modules`` tells whether some minimal-cardinality maximizer has
    ``Q(S_i) > 0`` for every part; ``partition`` is such a maximizer when
    one exists, otherwise the first minimal-cardinality maximizer found.
    """

    best_q: Fraction
    partition: tuple[VertexSet, ...]
    k: int
    all_modules: bool

    @property
    def k_minimal_modules(self) -> int | None:
        return self.k if self.all_modules else None

    def as_dict(self) -> dict:
        return {
            "best_q": self.best_q,
            "partition": [list(p.members) for p in self.partition],
            "k": self.k,
            "all_modules": self.all_modules,
        }


@dataclass(frozen=True)
class OracleResult:
    q_cut: Optimum
    q_rcut: Optimum
    q_ncut: Optimum
    h_G: Optimum
    cuts_examined: int
    multiway: PartitionResult | None = None

    def as_dict(self) -> dict:
        return {
            "q_cut": self.q_cut.as_dict(),
            "q_rcut": self.q_rcut.as_dict(),
            "q_ncut": self.q_ncut.as_dict(),
            "h_G": self.h_G.as_dict(),
            "cuts_examined": self.cuts_examined,
            "multiway": None if self.multiway is None else self.multiway.as_dict(),
        }


def _members(mask: int) -> tuple[int, ...]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class _Tracker:
    """Running optimum of ``num / den`` (positive ``den``) with tie counting.

    Ties are broken towards the lexicographically smallest member tuple.
    """

    __slots__ = ("num", "den", "mask", "count", "sign")

    def __init__(self, maximize: bool):
        self.num, self.den, self.mask, self.count = None, 1, 0, 0
        self.sign = 1 if maximize else -1

    def offer(self, num: int, den: int, mask: int) -> None:
        if self.num is None:
            self.num, self.den, self.mask, self.count = num, den, mask, 1
            return
        diff = self.sign * (num * self.den - self.num * den)
        if diff > 0:
            self.num, self.den, self.mask, self.count = num, den, mask, 1
        elif diff == 0:
            self.count += 1
            if _members(mask) < _members(self.mask):
                self.mask = mask

    def result(self, g: Graph, scale: Fraction) -> Optimum:
        return Optimum(Fraction(self.num, self.den) * scale, VertexSet(g, self.mask), self.count)


def brute_force_cuts(g: Graph, max_n: int = MAX_CUT_N, partitions: bool = False) -> OracleResult:
    """Exact ``q_cut``, ``q_rcut``, ``q_ncut`` and conductance ``h_G``.

    With ``partitions=True`` (and ``n <= 10``) the multiway optimum from
    :func:`brute_force_partitions` is attached as well.
    """
    n = g.n
    if n > max_n:
        raise TooLargeError(f"n={n} exceeds the enumeration cap {max_n}")
    if n < 2:
        raise TooLargeError("need at least two vertices for a cut")
    deg = g.degrees
    adj = g.masks
    vol_V = g.volume
    full = (1 << n) - 1

    best_q = _Tracker(True)  # Q numerator over vol V
    best_rel = _Tracker(True)
    best_norm = _Tracker(True)
    best_h = _Tracker(False)

    mask, vol, size, ein = 1, deg[0], 1, 0
    examined = 0
    for step in range(1 << (n - 1)):
        if step:
            # Gray code: toggle the vertex above the lowest set bit of step
            v = (step & -step).bit_length()
            bit = 1 << v
            k = (adj[v] & mask).bit_count()
            if mask & bit:
                mask ^= bit
                vol -= deg[v]
                size -= 1
                ein -= 2 * k
            else:
                mask ^= bit
                vol += deg[v]
                size += 1
                ein += 2 * k
        if mask == full:
            continue
        examined += 1
        qn = ein * vol_V - vol * vol  # vol V * Q(S)
        vol_c = vol_V - vol
        best_q.offer(qn, 1, mask)
        best_rel.offer(qn, size * (n - size), mask)
        best_norm.offer(qn, vol * vol_c, mask)
        best_h.offer(vol - ein, min(vol, vol_c), mask)

    multiway = brute_force_partitions(g) if partitions and n <= MAX_PARTITION_N else None
    return OracleResult(
        q_cut=best_q.result(g, Fraction(2, vol_V * vol_V)),
        q_rcut=best_rel.result(g, Fraction(n, vol_V)),
        q_ncut=best_norm.result(g, Fraction(1)),
        h_G=best_h.result(g, Fraction(1)),
        cuts_examined=examined,
        multiway=multiway,
    )


def brute_force_partitions(g: Graph, max_n: int = MAX_PARTITION_N) -> PartitionResult:
    """Maximize partition modularity over all set partitions.

    Partitions are generated as restricted-growth strings with per-block
    volume and internal edge counts updated incrementally. The score
    ``vol V * sum e_in(S_i) - sum vol(S_i)^2`` equals ``vol V^2`` times the
    partition modularity, so comparisons stay in integers.
    """
    n = g.n
    if n > max_n:
        raise TooLargeError(f"n={n} exceeds the partition enumeration cap {max_n}")
    deg = g.degrees
    adj = g.masks
    vol_V = g.volume

    block_mask: list[int] = []
    block_vol: list[int] = []
    block_ein: list[int] = []
    # best[0] = score, best[1] = k, best[2] = all-module flag, best[3] = masks
    best = [None, 0, False, ()]

    def consider():
        score = vol_V * sum(block_ein) - sum(x * x for x in block_vol)
        k = len(block_mask)
        modules = all(e * vol_V > x * x for e, x in zip(block_ein, block_vol))
        cur = best[0]
        if cur is None or score > cur or (score == cur and (k < best[1] or (k == best[1] and modules and not best[2]))):
            best[:] = [score, k, modules, tuple(block_mask)]

    def place(v: int):
        if v == n:
            consider()
            return
        bit = 1 << v
        nb = adj[v]
        for b in range(len(block_mask)):
            k = (nb & block_mask[b]).bit_count()
            block_mask[b] |= bit
            block_vol[b] += deg[v]
            block_ein[b] += 2 * k
            place(v + 1)
            block_mask[b] ^= bit
            block_vol[b] -= deg[v]
            block_ein[b] -= 2 * k
        block_mask.append(bit)
        block_vol.append(deg[v])
        block_ein.append(0)
        place(v + 1)
        block_mask.pop()
        block_vol.pop()
        block_ein.pop()

    place(0)
    score, k, modules, masks = best
    return PartitionResult(
        best_q=Fraction(score, vol_V * vol_V),
        partition=tuple(VertexSet(g, m) for m in masks),
        k=k,
        all_modules=modules,
    )


@dataclass
class VerificationReport:
    certificates: list[BoundCertificate]
    violations: list[dict] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"ok": self.ok, "checked": self.checked, "violations": self.violations}


def verify_bounds(
    g: Graph,
    certificates: list[BoundCertificate],
    oracle: OracleResult,
    tol: float = 1e-8,
) -> VerificationReport:
    """Check each certified claim against the exact optima.

    Certificates that do not claim anything (hypothesis failed or
    inconclusive) are left with ``verified_against_oracle = None``.
    Violations are collected with the offending numbers, never raised.
    """
    q_ncut = float(oracle.q_ncut.value)
    h_G = float(oracle.h_G.value)
    out, violations, checked = [], [], 0
    for cert in certificates:
        if not cert.certified:
            out.append(cert.with_verification(None))
            continue
        name, b = cert.name, cert.bounds
        diag = {"certificate": name.value, "bounds": dict(b), "detail": dict(cert.hypothesis_detail)}
        if name is CertName.LAPLACIAN_CHEEGER:
            ok = b["lower"] - tol <= h_G <= b["upper"] + tol
            diag["h_G"] = oracle.h_G.value
        elif name is CertName.SIMPLE_CHEEGER:
            ok = b["lower"] - tol <= q_ncut <= b["upper"] + tol
            diag["q_ncut"] = oracle.q_ncut.value
        elif name is CertName.PERTURBATION_CHEEGER:
            ok = b["lower"] <= q_ncut + tol
            diag["q_ncut"] = oracle.q_ncut.value
        else:
            S = VertexSet.from_members(g, cert.nodal_set)
            Q = modularity(g, S)
            ok = Q > 0
            diag["Q(S)"] = Q
            diag["S"] = list(S.members)
        checked += 1
        if not ok:
            violations.append(diag)
        out.append(cert.with_verification(ok))
    return VerificationReport(out, violations, checked)
