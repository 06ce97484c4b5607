"""Hypothesis strategies for small connected graphs and vertex subsets."""

import itertools

from hypothesis import strategies as st

from modbounds import build_graph, VertexSet


@st.composite
def connected_graphs(draw, min_n=2, max_n=9):
    n = draw(st.integers(min_n, max_n))
    # random spanning tree, then extra edges
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    pairs = [p for p in itertools.combinations(range(n), 2) if p not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
        edges.update(extra)
    return build_graph(n, sorted(edges))


@st.composite
def graph_and_subset(draw, proper=True, **kw):
    g = draw(connected_graphs(**kw))
    full = (1 << g.n) - 1
    lo, hi = (1, full - 1) if proper else (0, full)
    return g, VertexSet(g, draw(st.integers(lo, hi)))
