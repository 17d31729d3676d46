"""Undirected simple graphs with bitmask adjacency rows.

Row u is a Python int whose bit v is set iff {u, v} is an edge; degrees
are population counts and neighborhood comparisons are single integer
compares. Graphs are mutated only while being built and treated as
immutable afterwards, so any number of readers may share one.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Optional


class SimpleGraph:
    __slots__ = ("n", "rows", "labels", "name")

    def __init__(self, n: int, labels=None, name: str = ""):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        self.n = n
        self.rows: list[int] = [0] * n
        # optional per-vertex (element index, element order) annotation
        self.labels: Optional[list[tuple[int, int]]] = labels
        self.name = name

    # -- construction --------------------------------------------------------

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at {u} not allowed in a simple graph")
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u

    def add_clique(self, members: Iterable[int]) -> None:
        members = list(members)
        mask = 0
        for v in members:
            mask |= 1 << v
        for v in members:
            self.rows[v] |= mask & ~(1 << v)

    def without_vertex(self, v: int) -> "SimpleGraph":
        """A copy with vertex v removed and higher vertices shifted down by one."""
        low_mask = (1 << v) - 1
        out = SimpleGraph(self.n - 1, name=self.name)
        new_rows = []
        for u in range(self.n):
            if u == v:
                continue
            m = self.rows[u]
            new_rows.append((m & low_mask) | ((m >> (v + 1)) << v))
        out.rows = new_rows
        if self.labels is not None:
            out.labels = [lab for u, lab in enumerate(self.labels) if u != v]
        return out

    # -- queries ---------------------------------------------------------------

    @property
    def universe(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.rows]

    def neighbors(self, u: int) -> Iterator[int]:
        m = self.rows[u]
        while m:
            b = m & -m
            yield b.bit_length() - 1
            m ^= b

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        for u in range(self.n):
            m = self.rows[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                yield (u, b.bit_length() - 1)
                m ^= b

    def check_symmetry(self) -> bool:
        """Symmetric adjacency with an empty diagonal."""
        return all(
            not self.rows[u] >> u & 1
            and all(self.rows[v] >> u & 1 for v in self.neighbors(u))
            for u in range(self.n)
        )


# -- serialization -----------------------------------------------------------


def _vertex_label(graph: SimpleGraph, v: int) -> str:
    if graph.labels is not None:
        element, order = graph.labels[v]
        return f"g{element} (o={order})"
    return f"g{v}"


def to_edgelist_lines(graph: SimpleGraph) -> list[str]:
    """Lines 'u v' with u < v, 0-based."""
    return [f"{u} {v}" for u, v in graph.edges()]


def to_dot(graph: SimpleGraph) -> str:
    """Graphviz source: one node per element, labeled 'g<i> (o=<order>)'."""
    name = graph.name or "graph"
    lines = [f'graph "{name}" {{']
    for v in range(graph.n):
        lines.append(f'  n{v} [label="{_vertex_label(graph, v)}"];')
    for u, v in graph.edges():
        lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(graph: SimpleGraph) -> dict:
    return {
        "name": graph.name,
        "vertices": graph.n,
        "labels": [list(lab) for lab in graph.labels] if graph.labels else None,
        "edges": [[u, v] for u, v in graph.edges()],
    }


def to_json(graph: SimpleGraph) -> str:
    return json.dumps(to_json_dict(graph), indent=2) + "\n"
