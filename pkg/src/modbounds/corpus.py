"""The named graph collection used by the test and acceptance suites."""

from __future__ import annotations

from . import generators as gen
from .graph import Graph

__all__ = ["standard_corpus", "PLANTED_SPECS", "ladder_corpus"]

# (sizes, p_in, p_out, seed); all connected at these seeds, n <= 16
PLANTED_SPECS = [
    ([4, 4], 0.9, 0.1, 0),
    ([4, 4], 0.8, 0.2, 1),
    ([5, 5], 0.9, 0.1, 2),
    ([5, 5], 0.7, 0.2, 3),
    ([6, 6], 0.8, 0.1, 4),
    ([6, 6], 0.6, 0.15, 5),
    ([3, 3, 3], 0.9, 0.15, 6),
    ([4, 4, 4], 0.8, 0.1, 7),
    ([4, 4, 4], 0.7, 0.2, 8),
    ([5, 5, 5], 0.8, 0.08, 9),
    ([7, 7], 0.7, 0.1, 10),
    ([8, 8], 0.6, 0.08, 11),
    ([8, 8], 0.9, 0.05, 12),
    ([4, 4, 4, 4], 0.9, 0.08, 13),
    ([3, 5], 0.9, 0.15, 14),
    ([2, 6, 6], 1.0, 0.1, 15),
    ([5, 10], 0.7, 0.1, 16),
    ([6, 4, 3], 0.8, 0.12, 17),
    ([10, 6], 0.5, 0.1, 18),
    ([3, 3, 3, 3, 3], 1.0, 0.06, 19),
]


def standard_corpus() -> dict[str, Graph]:
    """Named small graphs covering every structural class."""
    out: dict[str, Graph] = {}
    for k in range(2, 7):
        out[f"K{k}"] = gen.complete(k)
    for k in range(3, 9):
        out[f"star{k}"] = gen.star(k)
    for k in range(3, 11):
        out[f"path{k}"] = gen.path(k)
        out[f"cycle{k}"] = gen.cycle(k)
    for sizes in ([2, 2], [2, 3], [1, 2, 3]):
        out["K" + ",".join(map(str, sizes))] = gen.complete_multipartite(sizes)
    out["barbell"] = gen.barbell(3)
    for i, (sizes, p_in, p_out, seed) in enumerate(PLANTED_SPECS):
        out[f"planted{i:02d}"] = gen.planted_partition(sizes, p_in, p_out, seed=seed)
    return out


def ladder_corpus() -> dict[str, Graph]:
    """Two cliques joined by a perfect matching; leading eigenvectors are two-valued."""
    return {f"ladder{k}": gen.clique_ladder(k) for k in range(3, 7)}
