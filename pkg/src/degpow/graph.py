"""Immutable small graphs stored as row bitsets.

Vertices are ``0..n-1`` with ``n <= 64``. Row ``v`` is a Python int whose bit
``u`` is set iff ``uv`` is an edge. Isolated vertices are part of the value:
two graphs with the same edges but different ``n`` are different graphs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for malformed graph input or an order above ``MAX_ORDER``."""


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match order")

    # -- basic structure -------------------------------------------------

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted non-increasing."""
        return tuple(sorted(self.degrees(), reverse=True))

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self.rows):
            for v in _bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    # -- derived graphs --------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_vertex(self, nbrs: int = 0) -> Graph:
        """Append vertex ``n`` adjacent to the vertex bitmask ``nbrs``."""
        if self.n >= MAX_ORDER:
            raise GraphError(f"order would exceed {MAX_ORDER}")
        v = self.n
        rows = [r | (1 << v) if nbrs >> i & 1 else r for i, r in enumerate(self.rows)]
        rows.append(nbrs & self.vertex_mask())
        return Graph(v + 1, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            acc = 0
            for u in _bits(row):
                acc |= 1 << perm[u]
            rows[perm[v]] = acc
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            acc = 0
            for u in _bits(self.rows[v]):
                j = index.get(u)
                if j is not None:
                    acc |= 1 << j
            rows.append(acc)
        return Graph(len(vertices), tuple(rows))

    def delete_vertex(self, v: int) -> Graph:
        return self.induced([u for u in range(self.n) if u != v])

    def strip_isolated(self) -> Graph:
        return self.induced([v for v in range(self.n) if self.rows[v]])

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.bool_)
        for u, v in self.edges():
            a[u, v] = a[v, u] = True
        return a

    def __repr__(self) -> str:
        return f"Graph({format_edge_list(self)!r})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"endpoint out of range in {u}-{v} for n={n}")
    if u == v:
        raise GraphError(f"loop requested at vertex {u}")


def build_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Graph on ``n`` vertices with the given edges; duplicates collapse."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return build_graph(n)


def from_adjacency(a: np.ndarray) -> Graph:
    a = np.asarray(a, dtype=bool)
    n = a.shape[0]
    if a.shape != (n, n) or (a != a.T).any() or a.diagonal().any():
        raise GraphError("adjacency matrix must be square, symmetric, loopless")
    iu, iv = np.nonzero(np.triu(a))
    return build_graph(n, zip(iu.tolist(), iv.tolist()))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    return Graph(g.n, tuple((~r & full) & ~(1 << v) for v, r in enumerate(g.rows)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_ORDER:
        raise GraphError(f"combined order {g1.n + g2.n} exceeds {MAX_ORDER}")
    return Graph(g1.n + g2.n, g1.rows + tuple(r << g1.n for r in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    u = disjoint_union(g1, g2)
    left = g1.vertex_mask()
    right = g2.vertex_mask() << g1.n
    rows = [r | right if v < g1.n else r | left for v, r in enumerate(u.rows)]
    return Graph(u.n, tuple(rows))


_EDGE_LIST = re.compile(r"^\s*(\d+)\s*:\s*(.*?)\s*$")


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n: u-v,u-v,..."``; the part after the colon may be empty."""
    m = _EDGE_LIST.match(text)
    if not m:
        raise GraphError(f"not an edge list: {text!r}")
    n = int(m.group(1))
    edges = []
    body = m.group(2)
    if body:
        for tok in body.split(","):
            parts = tok.strip().split("-")
            if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
                raise GraphError(f"bad edge token {tok!r}")
            edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    return f"{g.n}: " + ",".join(f"{u}-{v}" for u, v in g.edges())
