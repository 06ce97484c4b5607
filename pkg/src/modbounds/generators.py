"""Graph families used for testing and demonstration."""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .errors import CouldNotConnectError, TooSmallError
from .graph import Graph, build_graph, is_connected

__all__ = [
    "complete",
    "star",
    "cycle",
    "path",
    "complete_multipartite",
    "planted_partition",
    "barbell",
    "clique_ladder",
    "generate",
    "FAMILIES",
]


def complete(n: int) -> Graph:
    if n < 2:
        raise TooSmallError(f"complete graph needs n >= 2, got {n}")
    return build_graph(n, itertools.combinations(range(n), 2))


def star(n: int) -> Graph:
    """Star on ``n`` vertices with centre 0."""
    if n < 2:
        raise TooSmallError(f"star needs n >= 2, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise TooSmallError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 2:
        raise TooSmallError(f"path needs n >= 2, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _blocks(sizes: Sequence[int]) -> list[range]:
    out, start = [], 0
    for s in sizes:
        out.append(range(start, start + s))
        start += s
    return out


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts are consecutive index ranges."""
    sizes = [int(s) for s in part_sizes]
    if len(sizes) < 2 or min(sizes) < 1:
        raise TooSmallError(f"need at least two nonempty parts, got {sizes}")
    blocks = _blocks(sizes)
    edges = [
        (u, v)
        for a, b in itertools.combinations(blocks, 2)
        for u in a
        for v in b
    ]
    return build_graph(sum(sizes), edges)


def planted_partition(
    sizes: Sequence[int],
    p_in: float,
    p_out: float,
    seed: int | None = None,
    max_tries: int = 100,
) -> Graph:
    """Planted partition model.

    Each pair inside a block is joined with probability ``p_in``, each pair
    across blocks with ``p_out``, independently. Samples are redrawn until
    the graph is connected with no isolated vertices, at most ``max_tries``
    times. A fixed ``seed`` gives a fixed graph.
    """
    sizes = [int(s) for s in sizes]
    n = sum(sizes)
    if n < 2 or min(sizes, default=0) < 1:
        raise TooSmallError(f"planted partition needs n >= 2, got sizes {sizes}")
    if not (0 <= p_in <= 1 and 0 <= p_out <= 1):
        raise ValueError("edge probabilities must lie in [0, 1]")
    label = np.repeat(np.arange(len(sizes)), sizes)
    iu, ju = np.triu_indices(n, k=1)
    prob = np.where(label[iu] == label[ju], p_in, p_out)
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        keep = rng.random(len(iu)) < prob
        edges = list(zip(iu[keep].tolist(), ju[keep].tolist()))
        g = build_graph(n, edges, allow_isolated=True)
        if min(g.degrees) > 0 and is_connected(g):
            return build_graph(n, edges)
    raise CouldNotConnectError(
        f"no connected sample in {max_tries} draws (sizes={sizes}, p_in={p_in}, p_out={p_out})"
    )


def barbell(k: int = 3) -> Graph:
    """Two copies of K_k on ``0..k-1`` and ``k..2k-1`` joined by edge (k-1, k)."""
    if k < 2:
        raise TooSmallError(f"barbell needs cliques of size >= 2, got {k}")
    edges = list(itertools.combinations(range(k), 2))
    edges += [(u + k, v + k) for u, v in edges]
    edges.append((k - 1, k))
    return build_graph(2 * k, edges)


def clique_ladder(k: int) -> Graph:
    """Two copies of K_k joined by the perfect matching ``i -- i+k``.

    The graph is k-regular and its leading deflated eigenvector is constant
    on each clique.
    """
    if k < 2:
        raise TooSmallError(f"clique ladder needs k >= 2, got {k}")
    edges = list(itertools.combinations(range(k), 2))
    edges += [(u + k, v + k) for u, v in itertools.combinations(range(k), 2)]
    edges += [(i, i + k) for i in range(k)]
    return build_graph(2 * k, edges)


FAMILIES = {
    "complete": complete,
    "star": star,
    "cycle": cycle,
    "path": path,
    "complete_multipartite": complete_multipartite,
    "planted_partition": planted_partition,
    "barbell": barbell,
    "clique_ladder": clique_ladder,
}


def generate(family: str, *args, **kwargs) -> Graph:
    """Dispatch to a family by name, e.g. ``generate("cycle", 6)``."""
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return fn(*args, **kwargs)
