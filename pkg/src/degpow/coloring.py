"""Chromatic number, colour-critical edges and decomposition families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .canon import canonical_form
from .counting import minimal_members
from .graph import Graph, _bits
from .graph6 import graph6_encode

MAX_COLOR_ORDER = 12


def _check(f: Graph) -> None:
    if f.n > MAX_COLOR_ORDER:
        raise ValueError(f"colouring limited to {MAX_COLOR_ORDER} vertices, got {f.n}")


def clique_number(f: Graph) -> int:
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(size + 1, cand & f.rows[v])

    grow(0, f.vertex_mask())
    return best


def _colorable(f: Graph, k: int) -> bool:
    """Backtracking k-colouring, highest-degree vertex first."""
    order = sorted(range(f.n), key=lambda v: -f.degree(v))
    color = [-1] * f.n

    def place(i: int, used: int) -> bool:
        if i == f.n:
            return True
        v = order[i]
        forbidden = {color[u] for u in _bits(f.rows[v]) if color[u] >= 0}
        # a fresh colour is interchangeable with any other fresh one
        for c in range(min(k, used + 1)):
            if c in forbidden:
                continue
            color[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return place(0, 0)


def chromatic_number(f: Graph) -> int:
    _check(f)
    if f.n == 0:
        return 0
    k = max(clique_number(f), 1)
    while not _colorable(f, k):
        k += 1
    return k


def color_critical_edges(f: Graph) -> list[tuple[int, int]]:
    """Edges whose removal lowers the chromatic number."""
    chi = chromatic_number(f)
    return [e for e in f.edges() if chromatic_number(f.remove_edge(*e)) == chi - 1]


def proper_colorings(f: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Proper colourings using all ``k`` colours, one per partition into classes.

    Colour labels are normalised by first appearance (vertex 0 gets 0, each
    vertex gets at most one more than the largest colour so far).
    """
    n = f.n
    color = [-1] * n

    def rec(v: int, used: int):
        if n - v < k - used:
            return
        if v == n:
            yield tuple(color)
            return
        nbr_colors = {color[u] for u in _bits(f.rows[v] & ((1 << v) - 1))}
        for c in range(min(used + 1, k)):
            if c not in nbr_colors:
                color[v] = c
                yield from rec(v + 1, max(used, c + 1))
        color[v] = -1

    yield from rec(0, 0)


def color_classes(coloring: tuple[int, ...]) -> list[list[int]]:
    k = max(coloring) + 1 if coloring else 0
    classes: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(coloring):
        classes[c].append(v)
    return classes


def sigma(f: Graph) -> int:
    """Smallest colour class over all proper chi(F)-colourings."""
    _check(f)
    chi = chromatic_number(f)
    if chi == 0:
        return 0
    return min(min(len(c) for c in color_classes(col)) for col in proper_colorings(f, chi))


@dataclass(frozen=True)
class DecompositionFamily:
    members: tuple[Graph, ...]
    minimalized: bool

    def graph6(self) -> list[str]:
        return [graph6_encode(g) for g in self.members]


def decomposition_family(f: Graph, minimalize: bool = True) -> DecompositionFamily:
    """Bipartite graphs spanned by two classes of a proper chi(F)-colouring.

    Each member is the subgraph induced on the union of two classes with
    isolated vertices removed, up to isomorphism.
    """
    _check(f)
    chi = chromatic_number(f)
    if chi < 3:
        raise ValueError("decomposition family needs a non-bipartite graph")
    found = set()
    for col in proper_colorings(f, chi):
        classes = color_classes(col)
        for i in range(chi):
            for j in range(i + 1, chi):
                sub = f.induced(sorted(classes[i] + classes[j])).strip_isolated()
                found.add(canonical_form(sub))
    members = sorted(found, key=lambda g: (g.n, g.num_edges, graph6_encode(g)))
    if minimalize:
        members = minimal_members(members)
    return DecompositionFamily(tuple(members), minimalize)
