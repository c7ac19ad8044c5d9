"""Exhaustive extremal search over small graphs avoiding a forbidden family.

Two engines:

* ``naive`` sweeps all ``2**C(n,2)`` labeled graphs (n <= 6) in a kernel and
  canonicalizes only the optimal ones.  It is the reference.
* ``canonical`` grows graphs one vertex at a time.  A child ``G + v`` is
  kept only when the new vertex passes the canonical-deletion test (``G`` is
  isomorphic to ``G + v`` minus its canonically chosen vertex), so every
  isomorphism class is produced under exactly one parent class and subtrees
  can be explored independently.  Children containing a forbidden graph are
  cut; freeness is hereditary, so nothing reachable is lost.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .canon import _canon, canonical_form
from .coloring import decomposition_family
from .counting import (
    Pattern,
    degree_power_sum,
    minimal_members,
    star_count,
    subgraph_count,
    weighted_star_sum,
)
from .graph import Graph, empty_graph
from .graph6 import graph6_encode
from .kernels import contains_any, host_arrays, sweep_free_masks

log = logging.getLogger(__name__)

NAIVE_MAX_N = 6
CANONICAL_MAX_N = 9
ENGINES = ("auto", "naive", "canonical")


class SearchError(ValueError):
    """Bad search parameters (order above an engine cap, empty family, ...)."""


@dataclass(frozen=True)
class Objective:
    kind: str
    r: int = 1
    pattern: Graph | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("edges", "degree_power", "star_count", "copies"):
            raise SearchError(f"unknown objective {self.kind!r}")
        if self.r < 1:
            raise SearchError("objective exponent must be >= 1")
        if self.kind == "copies" and self.pattern is None:
            raise SearchError("copies objective needs a pattern graph")

    @classmethod
    def edges(cls) -> Objective:
        return cls("edges")

    @classmethod
    def degree_power(cls, r: int) -> Objective:
        return cls("degree_power", r)

    @classmethod
    def star_count(cls, r: int) -> Objective:
        return cls("star_count", r)

    @classmethod
    def copies(cls, h: Graph) -> Objective:
        return cls("copies", 1, h)

    def value(self, g: Graph) -> int:
        if self.kind == "edges":
            return g.num_edges
        if self.kind == "degree_power":
            return degree_power_sum(g, self.r)
        if self.kind == "star_count":
            return star_count(g, self.r)
        assert self.pattern is not None
        return subgraph_count(self.pattern, g)

    def label(self) -> str:
        if self.kind == "edges":
            return "edges"
        if self.kind == "copies":
            assert self.pattern is not None
            return f"copies({graph6_encode(self.pattern)})"
        return f"{self.kind}({self.r})"


@dataclass(frozen=True)
class ForbiddenFamily:
    """Canonical, pairwise non-redundant forbidden graphs (isolated vertices dropped)."""

    members: tuple[Graph, ...]

    @classmethod
    def of(cls, graphs: Iterable[Graph]) -> ForbiddenFamily:
        forms = set()
        for g in graphs:
            s = g.strip_isolated()
            if s.num_edges == 0:
                raise SearchError("forbidden graphs must have at least one edge")
            forms.add(canonical_form(s))
        ordered = sorted(forms, key=lambda g: (g.n, g.num_edges, graph6_encode(g)))
        return cls(tuple(minimal_members(ordered)))

    def graph6(self) -> list[str]:
        return [graph6_encode(g) for g in self.members]

    def __len__(self) -> int:
        return len(self.members)


class _Packed:
    """Family members stacked into padded arrays for the kernels."""

    def __init__(self, family: ForbiddenFamily):
        pats = [Pattern.of(g) for g in family.members]
        self.patterns = pats
        m = len(pats)
        kmax = max([p.k for p in pats], default=1)
        self.k = np.array([p.k for p in pats], dtype=np.int64)
        self.edges = np.array([p.num_edges for p in pats], dtype=np.int64)
        self.order = np.zeros((m, kmax), dtype=np.int64)
        self.parent = np.full((m, kmax), -1, dtype=np.int64)
        self.adj = np.zeros((m, kmax, kmax), dtype=np.bool_)
        self.deg = np.zeros((m, kmax), dtype=np.int64)
        for i, p in enumerate(pats):
            self.order[i, : p.k] = p.order
            self.parent[i, : p.k] = p.parent
            self.adj[i, : p.k, : p.k] = p.adj
            self.deg[i, : p.k] = p.deg

    def contains(self, g: Graph) -> bool:
        if not self.patterns:
            return False
        adj, nbr, deg = host_arrays(g.rows)
        return contains_any(self.order, self.parent, self.adj, self.deg, self.k, adj, nbr, deg) >= 0

    def contains_through(self, g: Graph, v: int) -> bool:
        if not self.patterns:
            return False
        adj, nbr, deg = host_arrays(g.rows)
        ne = g.num_edges
        return any(
            p.num_edges <= ne and p.occurs_through(adj, nbr, deg, v) for p in self.patterns
        )


@dataclass(frozen=True)
class SearchResult:
    n: int
    objective: str
    family: tuple[str, ...]
    optimum: int
    witnesses: tuple[Graph, ...]
    explored: int
    complete: bool
    engine: str = "canonical"
    extra: dict = field(default_factory=dict, compare=False)

    def witness_graph6(self) -> list[str]:
        return [graph6_encode(g) for g in self.witnesses]

    def to_record(self) -> dict:
        return {
            "objective": self.objective,
            "n": self.n,
            "family": list(self.family),
            "optimum": str(self.optimum),
            "witnesses": self.witness_graph6(),
            "explored": self.explored,
            "complete": self.complete,
        }


# -- canonical augmentation ---------------------------------------------------


def _vertex_invariant(g: Graph, deg: Sequence[int], v: int) -> tuple:
    return deg[v], tuple(sorted(deg[u] for u in g.neighbors(v)))


def _accept(child: Graph, parent: Graph) -> bool:
    """Canonical-deletion test for the last vertex of ``child``."""
    v = child.n - 1
    deg = child.degrees()
    if deg[v] < max(deg):
        return False
    inv = [_vertex_invariant(child, deg, x) for x in range(child.n)]
    top = max(inv)
    if inv[v] != top:
        return False
    ties = [x for x in range(child.n) if inv[x] == top]
    if len(ties) == 1:
        return True
    order = _canon(child.rows)[0]
    pos = {x: i for i, x in enumerate(order)}
    c = max(ties, key=pos.__getitem__)
    if c == v:
        return True
    return canonical_form(child.delete_vertex(c)) == parent


def children(g: Graph, packed: _Packed) -> list[Graph]:
    """Canonical forms of the accepted one-vertex extensions of canonical ``g``."""
    k = g.n
    deg = g.degrees()
    out = []
    seen = set()
    for nbrs in range(1 << k):
        d = nbrs.bit_count()
        # the new vertex must reach the maximum degree of the child
        if any(deg[u] + (nbrs >> u & 1) > d for u in range(k)):
            continue
        child = g.add_vertex(nbrs)
        if packed.contains_through(child, k):
            continue
        if not _accept(child, g):
            continue
        cf = canonical_form(child)
        if cf not in seen:
            seen.add(cf)
            out.append(cf)
    return out


def _walk(g: Graph, n: int, packed: _Packed) -> Iterator[Graph]:
    if g.n == n:
        yield g
        return
    for c in children(g, packed):
        yield from _walk(c, n, packed)


def enumerate_free(n: int, family: Iterable[Graph] | ForbiddenFamily = ()) -> Iterator[Graph]:
    """Canonical representatives of all n-vertex graphs with no member of ``family``.

    With an empty family this lists every isomorphism class on ``n`` vertices.
    """
    fam = family if isinstance(family, ForbiddenFamily) else ForbiddenFamily.of(family)
    if n < 0 or n > CANONICAL_MAX_N + 1:
        raise SearchError(f"enumeration supports 0 <= n <= {CANONICAL_MAX_N + 1}")
    if n == 0:
        yield empty_graph(0)
        return
    yield from _walk(empty_graph(1), n, _Packed(fam))


def is_edge_maximal(g: Graph, packed: _Packed) -> bool:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and not packed.contains_through(g.add_edge(u, v), u):
                return False
    return True


@dataclass
class _Acc:
    best: int | None = None
    witnesses: set = field(default_factory=set)
    explored: int = 0

    def offer(self, g: Graph, value: int) -> None:
        self.explored += 1
        if self.best is None or value > self.best:
            self.best = value
            self.witnesses = {g}
        elif value == self.best:
            self.witnesses.add(g)

    def merge(self, other: _Acc) -> _Acc:
        out = _Acc(self.best, set(self.witnesses), self.explored + other.explored)
        if other.best is not None:
            if out.best is None or other.best > out.best:
                out.best, out.witnesses = other.best, set(other.witnesses)
            elif other.best == out.best:
                out.witnesses |= other.witnesses
        return out


def _scan_subtree(args) -> _Acc:
    root, n, family, objective, maximal_only = args
    packed = _Packed(family)
    acc = _Acc()
    for g in _walk(root, n, packed):
        if maximal_only and not is_edge_maximal(g, packed):
            continue
        acc.offer(g, objective.value(g))
    return acc


def _canonical_search(n, family, objective, workers, maximal_only, split_depth) -> _Acc:
    packed = _Packed(family)
    depth = max(1, min(n, split_depth))
    roots = list(_walk(empty_graph(1), depth, packed))
    jobs = [(r, n, family, objective, maximal_only) for r in roots]
    if workers <= 1 or len(jobs) <= 1:
        parts = [_scan_subtree(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_subtree, jobs))
    acc = _Acc()
    for p in parts:
        acc = acc.merge(p)
    return acc


# -- naive labeled sweep ------------------------------------------------------


def _naive_search(n, family, objective, maximal_only) -> _Acc:
    pairs = [(u, v) for v in range(n) for u in range(v)]
    pu = np.array([p[0] for p in pairs], dtype=np.int64)
    pv = np.array([p[1] for p in pairs], dtype=np.int64)
    packed = _Packed(family)
    free = sweep_free_masks(n, pu, pv, packed.order, packed.parent, packed.adj,
                            packed.deg, packed.k, packed.edges)
    masks = np.nonzero(free)[0]
    acc = _Acc()
    best = None
    best_masks: list[int] = []
    for x in masks.tolist():
        g = Graph(n, _rows_of_mask(n, pairs, x))
        if maximal_only and not is_edge_maximal(g, packed):
            continue
        val = objective.value(g)
        if best is None or val > best:
            best, best_masks = val, [x]
        elif val == best:
            best_masks.append(x)
    acc.best = best
    acc.witnesses = {canonical_form(Graph(n, _rows_of_mask(n, pairs, x))) for x in best_masks}
    acc.explored = 1 << len(pairs)
    return acc


def _rows_of_mask(n: int, pairs: list[tuple[int, int]], x: int) -> tuple[int, ...]:
    rows = [0] * n
    b = 0
    while x:
        if x & 1:
            u, v = pairs[b]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        x >>= 1
        b += 1
    return tuple(rows)


# -- public entry points --------------------------------------------------------


def search_max(
    n: int,
    family: Iterable[Graph] | ForbiddenFamily,
    objective: Objective,
    *,
    engine: str = "auto",
    workers: int = 1,
    maximal_only: bool = False,
    split_depth: int = 4,
) -> SearchResult:
    """Maximum of ``objective`` over n-vertex graphs containing no family member.

    All optimal graphs are returned as canonical forms sorted by graph6.
    With ``maximal_only`` only edge-maximal free graphs are scanned; the
    optimum is unchanged since every objective is monotone under adding
    edges, but witnesses that are not edge-maximal are not reported.
    """
    fam = family if isinstance(family, ForbiddenFamily) else ForbiddenFamily.of(family)
    if not len(fam):
        raise SearchError("empty forbidden family; the optimum is attained by K_n")
    if engine not in ENGINES:
        raise SearchError(f"engine must be one of {ENGINES}")
    if engine == "auto":
        engine = "canonical"
    if n < 1:
        raise SearchError("n must be >= 1")
    if engine == "naive" and n > NAIVE_MAX_N:
        raise SearchError(f"naive engine supports n <= {NAIVE_MAX_N}")
    if engine == "canonical" and n > CANONICAL_MAX_N:
        raise SearchError(f"canonical engine supports n <= {CANONICAL_MAX_N}")
    if engine == "naive":
        acc = _naive_search(n, fam, objective, maximal_only)
    else:
        acc = _canonical_search(n, fam, objective, workers, maximal_only, split_depth)
    assert acc.best is not None  # the empty graph is always free
    witnesses = tuple(sorted(acc.witnesses, key=graph6_encode))
    if objective.kind == "degree_power":
        for g in witnesses:
            if weighted_star_sum(g, objective.r) != acc.best:
                raise AssertionError(f"weight identity failed on witness {graph6_encode(g)}")
    log.debug("search n=%d %s: optimum %d over %d", n, objective.label(), acc.best, acc.explored)
    return SearchResult(
        n=n,
        objective=objective.label(),
        family=tuple(fam.graph6()),
        optimum=acc.best,
        witnesses=witnesses,
        explored=acc.explored,
        complete=True,
        engine=engine,
    )


def biex(n: int, f: Graph, **kwargs) -> SearchResult:
    """Turán number of the minimalized decomposition family of ``f``."""
    fam = decomposition_family(f, minimalize=True)
    return search_max(n, fam.members, Objective.edges(), **kwargs)


def generalized_turan(n: int, h: Graph, family: Iterable[Graph] | ForbiddenFamily, **kwargs) -> SearchResult:
    """Maximum number of copies of ``h`` in an n-vertex graph avoiding ``family``."""
    if h.strip_isolated().n > 5:
        raise SearchError("counted graph limited to 5 non-isolated vertices")
    return search_max(n, family, Objective.copies(h), **kwargs)


def scan(
    n: int, family: Iterable[Graph] | ForbiddenFamily, check: Callable[[Graph], bool]
) -> tuple[int, list[Graph]]:
    """Apply ``check`` to every free class; return (count, failures)."""
    count = 0
    failures = []
    for g in enumerate_free(n, family):
        count += 1
        if not check(g):
            failures.append(g)
    return count, failures
