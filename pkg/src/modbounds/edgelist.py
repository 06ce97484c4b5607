"""Plain-text edge lists.

One edge per line as two whitespace-separated 0-based indices. Lines
starting with ``#`` are comments, except ``#n <count>`` which fixes the
vertex count (otherwise it is one more than the largest index seen).
"""

from __future__ import annotations

import os

from .errors import ParseError
from .graph import Graph, build_graph

__all__ = ["read_edge_list", "write_edge_list", "load", "save"]


def read_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            head = line[1:].split()
            if len(head) == 2 and head[0] == "n":
                try:
                    n = int(head[1])
                except ValueError:
                    raise ParseError(f"bad vertex count {head[1]!r}", lineno) from None
                if n < 1:
                    raise ParseError(f"vertex count must be positive, got {n}", lineno)
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two vertex indices, got {len(fields)} fields", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer vertex index in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex index in {line!r}", lineno)
        edges.append((u, v))
    if n is None:
        if not edges:
            raise ParseError("no edges and no '#n' header")
        n = 1 + max(max(e) for e in edges)
    return build_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"#n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def load(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return read_edge_list(fh.read())


def save(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_edge_list(g))
