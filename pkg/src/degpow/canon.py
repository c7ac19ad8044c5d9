"""Canonical labeling by partition refinement and individualization.

The search tree is the usual one: refine an ordered vertex partition to an
equitable one, individualize each vertex of the first smallest non-trivial
cell, recurse.  Every leaf gives a vertex order; the canonical order is the
one whose relabeled row tuple is lexicographically smallest.  Automorphisms
found on the way (leaves with equal certificates, plus twin transpositions
known up front) prune sibling branches that lie in a common orbit of the
pointwise stabilizer of the current prefix.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, _bits


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((rows[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            split = True
            for k in keys:
                out.append([v for v in cell if sig[v] == k])
        cells = out
        if not split:
            return cells


def _certificate(rows: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        acc = 0
        for u in _bits(rows[v]):
            acc |= 1 << pos[u]
        cert.append(acc)
    return tuple(cert)


def _twin_generators(rows: tuple[int, ...]) -> list[tuple[int, ...]]:
    n = len(rows)
    gens = []
    for u in range(n):
        for w in range(u + 1, n):
            bu, bw = 1 << u, 1 << w
            if rows[u] & ~bw == rows[w] & ~bu:
                p = list(range(n))
                p[u], p[w] = w, u
                gens.append(tuple(p))
    return gens


class _Search:
    def __init__(self, rows: tuple[int, ...]):
        self.rows = rows
        self.best_cert: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.gens: list[tuple[int, ...]] = _twin_generators(rows)

    def run(self) -> list[int]:
        n = len(self.rows)
        start = sorted(range(n), key=lambda v: self.rows[v].bit_count())
        cells: list[list[int]] = []
        for v in start:
            if cells and self.rows[cells[-1][0]].bit_count() == self.rows[v].bit_count():
                cells[-1].append(v)
            else:
                cells.append([v])
        self._visit(cells, [])
        assert self.best_order is not None
        return self.best_order

    def _orbit_roots(self, prefix: list[int], cell: list[int]) -> dict[int, int]:
        parent = {v: v for v in range(len(self.rows))}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if all(g[p] == p for p in prefix):
                for v, w in enumerate(g):
                    a, b = find(v), find(w)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return {v: find(v) for v in cell}

    def _visit(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(self.rows, cells)
        if len(cells) == len(self.rows):
            order = [c[0] for c in cells]
            cert = _certificate(self.rows, order)
            if self.best_cert is None or cert < self.best_cert:
                self.best_cert, self.best_order = cert, order
            elif cert == self.best_cert:
                assert self.best_order is not None
                g = [0] * len(order)
                for a, b in zip(order, self.best_order):
                    g[a] = b
                self.gens.append(tuple(g))
            return
        idx = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        target = cells[idx]
        done: list[int] = []
        ngens = -1
        roots: dict[int, int] = {}
        for v in target:
            if len(self.gens) != ngens:
                ngens = len(self.gens)
                roots = self._orbit_roots(prefix, target)
            if any(roots[v] == roots[d] for d in done):
                continue
            done.append(v)
            rest = [u for u in target if u != v]
            self._visit(cells[:idx] + [[v], rest] + cells[idx + 1 :], prefix + [v])


@lru_cache(maxsize=1 << 17)
def _canon(rows: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if not rows:
        return (), ()
    order = _Search(rows).run()
    return tuple(order), _certificate(rows, order)


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` such that ``order[i]`` is the vertex labeled ``i``."""
    return list(_canon(g.rows)[0])


def canonical_form(g: Graph) -> Graph:
    """Relabeled copy of ``g``; equal for isomorphic inputs."""
    return Graph(g.n, _canon(g.rows)[1])


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and canonical_form(g1) == canonical_form(g2)
