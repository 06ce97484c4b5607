"""Simple undirected graphs, vertex subsets and structural predicates.

Vertices are the integers ``0..n-1``. A :class:`Graph` is immutable once
built; adjacency is kept both as sorted neighbour tuples and as integer
bitmasks, the latter being what the set-level routines (edge counts,
exhaustive enumeration) operate on.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    IndexOutOfRangeError,
    IsolatedVertexError,
    SelfLoopError,
)

__all__ = [
    "Graph",
    "VertexSet",
    "Structure",
    "StructureKind",
    "build_graph",
    "edge_count_between",
    "e_in",
    "e_out",
    "is_connected",
    "is_bipartite",
    "connected_components",
    "classify_structure",
    "induced_is_connected",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected unweighted graph on vertices ``0..n-1``.

    Use :func:`build_graph` rather than the constructor; it validates the
    edge list and fills in the derived fields.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    volume: int
    _masks: tuple[int, ...] = field(repr=False)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def n_edges(self) -> int:
        return self.volume // 2

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an integer bitmask."""
        return self._masks

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def average_degree(self) -> float:
        return self.volume / self.n

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        for u, nbrs in enumerate(self.adjacency):
            A[u, list(nbrs)] = 1.0
        A.setflags(write=False)
        return A

    @cached_property
    def degree_vector(self) -> np.ndarray:
        d = np.asarray(self.degrees, dtype=float)
        d.setflags(write=False)
        return d

    @cached_property
    def sqrt_degrees(self) -> np.ndarray:
        """The vector with entries sqrt(d_i)."""
        s = np.sqrt(self.degree_vector)
        s.setflags(write=False)
        return s

    @property
    def vertices(self) -> "VertexSet":
        return VertexSet(self, (1 << self.n) - 1)

    def vertex_set(self, members: Iterable[int]) -> "VertexSet":
        return VertexSet.from_members(self, members)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.n_edges})"


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    *,
    allow_isolated: bool = False,
) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Raises on self-loops, repeated edges (in either orientation), indices
    outside ``0..n-1`` and, unless ``allow_isolated`` is set, vertices of
    degree zero. Connectivity is *not* required here; see
    :func:`is_connected`.
    """
    n = int(n)
    if n < 1:
        raise IndexOutOfRangeError(f"vertex count must be positive, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for edge in edges:
        u, v = (int(x) for x in edge)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            raise DuplicateEdgeError(f"edge ({min(u, v)}, {max(u, v)}) listed twice")
        nbrs[u].add(v)
        nbrs[v].add(u)
    if not allow_isolated:
        isolated = [i for i in range(n) if not nbrs[i]]
        if isolated:
            raise IsolatedVertexError(f"isolated vertices: {isolated}")
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    degrees = tuple(len(a) for a in adjacency)
    masks = tuple(sum(1 << j for j in a) for a in adjacency)
    return Graph(n, adjacency, degrees, sum(degrees), masks)


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices of a graph, stored as a bitmask.

    Volume and cardinality are computed once at construction.
    """

    graph: Graph = field(repr=False, compare=False, hash=False)
    mask: int
    size: int = field(init=False)
    volume: int = field(init=False)

    def __post_init__(self):
        full = (1 << self.graph.n) - 1
        if self.mask & ~full:
            raise IndexOutOfRangeError("vertex set has members outside the graph")
        members = self.members
        object.__setattr__(self, "size", len(members))
        object.__setattr__(self, "volume", sum(self.graph.degrees[i] for i in members))

    @classmethod
    def from_members(cls, graph: Graph, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for i in members:
            i = int(i)
            if not 0 <= i < graph.n:
                raise IndexOutOfRangeError(f"vertex {i} outside 0..{graph.n - 1}")
            mask |= 1 << i
        return cls(graph, mask)

    @classmethod
    def from_indicator(cls, graph: Graph, indicator) -> "VertexSet":
        return cls.from_members(graph, np.flatnonzero(np.asarray(indicator)))

    @property
    def members(self) -> tuple[int, ...]:
        m, out, i = self.mask, [], 0
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return tuple(out)

    def complement(self) -> "VertexSet":
        return VertexSet(self.graph, ((1 << self.graph.n) - 1) & ~self.mask)

    def indicator(self) -> np.ndarray:
        """Characteristic vector as a float array of zeros and ones."""
        x = np.zeros(self.graph.n)
        x[list(self.members)] = 1.0
        return x

    @property
    def is_proper(self) -> bool:
        """True unless the set is empty or the whole vertex set."""
        return 0 < self.size < self.graph.n

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(self.members)

    def __repr__(self):
        return f"VertexSet({set(self.members) or '{}'})"


def edge_count_between(g: Graph, S: VertexSet, T: VertexSet) -> int:
    """The bilinear count ``1_S^T A 1_T``.

    Edges inside ``S ∩ T`` are counted twice, so ``e(S, S)`` is twice the
    number of edges of the induced subgraph.
    """
    masks = g.masks
    t = T.mask
    return sum((masks[i] & t).bit_count() for i in S.members)


def e_in(g: Graph, S: VertexSet) -> int:
    return edge_count_between(g, S, S)


def e_out(g: Graph, S: VertexSet) -> int:
    return edge_count_between(g, S, S.complement())


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp, queue = [root], deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def induced_is_connected(g: Graph, S: VertexSet) -> bool:
    """Whether the subgraph induced by a nonempty set ``S`` is connected."""
    if S.size == 0:
        return False
    start = S.members[0]
    reached = 1 << start
    frontier = reached
    while frontier:
        nxt = 0
        m, i = frontier, 0
        while m:
            if m & 1:
                nxt |= g.masks[i]
            m >>= 1
            i += 1
        nxt &= S.mask & ~reached
        reached |= nxt
        frontier = nxt
    return reached == S.mask


class StructureKind(enum.Enum):
    STAR = "Star"
    COMPLETE = "Complete"
    COMPLETE_MULTIPARTITE = "CompleteMultipartite"
    OTHER = "Other"


@dataclass(frozen=True)
class Structure:
    kind: StructureKind
    parts: tuple[tuple[int, ...], ...] | None = None

    @property
    def is_complete_multipartite(self) -> bool:
        """True for stars and complete graphs as well."""
        return self.kind is not StructureKind.OTHER


def classify_structure(g: Graph) -> Structure:
    """Detect complete multipartite structure.

    ``g`` is complete multipartite exactly when "equal or non-adjacent" is
    an equivalence relation: every vertex's closed non-neighbourhood is an
    independent set, and all of them coincide along each class. The result
    is exclusive with priority Star > Complete > CompleteMultipartite.
    """
    if not is_connected(g):
        raise DisconnectedError("classify_structure requires a connected graph")
    full = (1 << g.n) - 1
    # class of u = u together with its non-neighbours
    classes = [full & ~g.masks[u] for u in range(g.n)]
    parts: list[tuple[int, ...]] = []
    assigned = 0
    for u in range(g.n):
        if assigned >> u & 1:
            continue
        cls = classes[u]
        members = [i for i in range(g.n) if cls >> i & 1]
        if any(classes[i] != cls for i in members):
            return Structure(StructureKind.OTHER)
        parts.append(tuple(members))
        assigned |= cls
    parts_t = tuple(parts)
    if len(parts) == 2 and min(len(p) for p in parts) == 1:
        return Structure(StructureKind.STAR, parts_t)
    if len(parts) == g.n:
        return Structure(StructureKind.COMPLETE, parts_t)
    return Structure(StructureKind.COMPLETE_MULTIPARTITE, parts_t)
