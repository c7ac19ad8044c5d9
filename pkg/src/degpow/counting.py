"""Exact degree-power sums, star counts and subgraph-copy counts.

Stars are counted centre-rooted: the number of ``S_p`` copies is
``sum_v C(deg v, p)``.  At ``p = 1`` that is ``2|E|`` rather than ``|E|``;
this is the convention under which ``e_r = sum_p w_p * N(S_p)`` holds with
``w_1 = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .graph import Graph
from .kernels import embed_count, host_arrays

MAX_WEIGHT_R = 20
MAX_AUT_ORDER = 10


def degree_power_sum(g: Graph, r: int) -> int:
    if r < 1:
        raise ValueError("exponent r must be >= 1")
    return sum(d**r for d in g.degrees())


def star_count(g: Graph, p: int) -> int:
    if p < 1:
        raise ValueError("star size p must be >= 1")
    return sum(comb(d, p) for d in g.degrees())


@lru_cache(maxsize=None)
def star_weights(r: int) -> tuple[int, ...]:
    """Weights ``w_1..w_r`` with ``e_r(G) = sum_p w_p N(S_p, G)``.

    ``w_p`` is the number of surjections from an r-set onto a p-set,
    computed by inclusion-exclusion.
    """
    if not 1 <= r <= MAX_WEIGHT_R:
        raise ValueError(f"r must be in 1..{MAX_WEIGHT_R}")
    return tuple(
        sum((-1) ** i * comb(p, i) * (p - i) ** r for i in range(p))
        for p in range(1, r + 1)
    )


def weighted_star_sum(g: Graph, r: int) -> int:
    """Right-hand side of the weight identity, summed star by star."""
    return sum(w * star_count(g, p) for p, w in enumerate(star_weights(r), start=1))


def _greedy_order(h: Graph, start: int | None) -> tuple[list[int], list[int]]:
    deg = h.degrees()
    placed: list[int] = []
    pos: dict[int, int] = {}
    remaining = set(range(h.n))
    while remaining:
        if not placed and start is not None:
            v = start
        else:
            v = max(
                remaining,
                key=lambda u: (sum(1 for w in h.neighbors(u) if w in pos), deg[u], -u),
            )
        pos[v] = len(placed)
        placed.append(v)
        remaining.discard(v)
    parent = []
    for v in placed:
        earlier = [pos[u] for u in h.neighbors(v) if pos[u] < pos[v]]
        parent.append(min(earlier) if earlier else -1)
    return placed, parent


@dataclass(frozen=True, eq=False)
class Pattern:
    """A pattern graph prepared for the embedding kernel.

    Isolated vertices are stripped on construction, so ``graph`` may have
    fewer vertices than the input.
    """

    graph: Graph
    order: np.ndarray
    parent: np.ndarray
    adj: np.ndarray
    deg: np.ndarray
    anchored_order: np.ndarray
    anchored_parent: np.ndarray

    @classmethod
    def of(cls, h: Graph) -> Pattern:
        return _pattern(h)

    @property
    def k(self) -> int:
        return self.graph.n

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges

    def embeddings(self, g: Graph, *, stop_first: bool = False) -> int:
        adj, nbr, deg = host_arrays(g.rows)
        return self.embeddings_arrays(adj, nbr, deg, stop_first=stop_first)

    def embeddings_arrays(self, adj, nbr, deg, *, stop_first: bool = False) -> int:
        return int(embed_count(self.order, self.parent, self.adj, self.deg,
                               adj, nbr, deg, -1, stop_first))

    def occurs_through(self, adj, nbr, deg, v: int) -> bool:
        """True iff some copy in the host uses host vertex ``v``."""
        for s in range(self.anchored_order.shape[0]):
            if embed_count(self.anchored_order[s], self.anchored_parent[s],
                           self.adj, self.deg, adj, nbr, deg, v, True):
                return True
        return False


@lru_cache(maxsize=4096)
def _pattern(h: Graph) -> Pattern:
    hs = h.strip_isolated()
    order, parent = _greedy_order(hs, None)
    adj = hs.adjacency_matrix()
    deg = np.array(hs.degrees(), dtype=np.int64)
    hadj_h, hnbr_h, hdeg_h = host_arrays(hs.rows)

    # one anchored start per automorphism orbit
    reps: list[tuple[list[int], list[int]]] = []
    for v in range(hs.n):
        seen = False
        for o, p in reps:
            if embed_count(np.array(o, dtype=np.int64), np.array(p, dtype=np.int64),
                           adj, deg, hadj_h, hnbr_h, hdeg_h, v, True):
                seen = True
                break
        if not seen:
            reps.append(_greedy_order(hs, v))
    k = hs.n
    a_order = np.array([o for o, _ in reps], dtype=np.int64).reshape(len(reps), k)
    a_parent = np.array([p for _, p in reps], dtype=np.int64).reshape(len(reps), k)
    return Pattern(hs, np.array(order, dtype=np.int64), np.array(parent, dtype=np.int64),
                   adj, deg, a_order, a_parent)


def automorphism_count(h: Graph) -> int:
    """|Aut(H)|, counted as the embeddings of H into itself."""
    if h.n > MAX_AUT_ORDER:
        raise ValueError(f"automorphism count limited to {MAX_AUT_ORDER} vertices")
    return _automorphisms(h)


def _automorphisms(h: Graph) -> int:
    if h.n == 0:
        return 1
    order, parent = _greedy_order(h, None)
    adj, nbr, deg = host_arrays(h.rows)
    return int(embed_count(np.array(order, dtype=np.int64), np.array(parent, dtype=np.int64),
                           adj, deg, adj, nbr, deg, -1, False))


def embedding_count(h: Graph, g: Graph) -> int:
    """Injective edge-preserving maps from H (isolated vertices stripped) into G."""
    return Pattern.of(h).embeddings(g)


def subgraph_count(h: Graph, g: Graph) -> int:
    """Number of subgraphs of G isomorphic to H with its isolated vertices removed.

    An H without edges strips to the empty graph, which occurs once.
    """
    pat = Pattern.of(h)
    if pat.k > g.n:
        return 0
    emb = pat.embeddings(g)
    if emb == 0:
        return 0
    return emb // _automorphisms(pat.graph)


def contains_subgraph(h: Graph, g: Graph) -> bool:
    pat = Pattern.of(h)
    if pat.k > g.n or pat.num_edges > g.num_edges:
        return False
    return pat.embeddings(g, stop_first=True) > 0


def minimal_members(graphs: list[Graph]) -> list[Graph]:
    """Drop every graph that contains another, distinct graph of the list."""
    return [g for g in graphs if not any(h != g and contains_subgraph(h, g) for h in graphs)]
