"""Named graphs and extremal constructions."""

from __future__ import annotations

import random
from typing import Sequence

from .graph import MAX_ORDER, Graph, GraphError, build_graph, empty_graph, join


class ConstructionError(ValueError):
    """A construction's parameters are infeasible or out of range."""


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise ConstructionError(f"order {n} exceeds {MAX_ORDER}")


def clique(k: int) -> Graph:
    _check_order(k)
    return build_graph(k, [(u, v) for u in range(k) for v in range(u + 1, k)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ConstructionError("a cycle needs at least 3 vertices")
    _check_order(k)
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    """Path on ``k`` vertices."""
    if k < 1:
        raise ConstructionError("a path needs at least 1 vertex")
    _check_order(k)
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def star(r: int) -> Graph:
    """``S_r``: a centre with ``r`` leaves."""
    if r < 0:
        raise ConstructionError("star size must be >= 0")
    return complete_multipartite([1, r]) if r else empty_graph(1)


def matching(m: int) -> Graph:
    """``m`` disjoint edges."""
    _check_order(2 * m)
    return build_graph(2 * m, [(2 * i, 2 * i + 1) for i in range(m)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise ConstructionError("parts must be a non-empty list of positive orders")
    n = sum(parts)
    _check_order(n)
    label = []
    for i, p in enumerate(parts):
        label.extend([i] * p)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if label[u] != label[v]])


def turan_parts(n: int, k: int) -> list[int]:
    q, rem = divmod(n, k)
    return [q + 1] * rem + [q] * (k - rem)


def turan(n: int, k: int) -> Graph:
    """``T(n, k)``: balanced complete k-partite graph (empty parts dropped)."""
    if k < 1 or n < 1:
        raise ConstructionError("turan needs n >= 1 and k >= 1")
    return complete_multipartite([p for p in turan_parts(n, k) if p])


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def book(k: int) -> Graph:
    """``B_{k,1}``: two copies of ``K_k`` sharing exactly one vertex."""
    if k < 2:
        raise ConstructionError("book_B_k1 needs k >= 2")
    n = 2 * k - 1
    _check_order(n)
    left = range(0, k)
    right = [0] + list(range(k, n))
    edges = [(u, v) for side in (list(left), right) for i, u in enumerate(side) for v in side[i + 1 :]]
    return build_graph(n, edges)


def complete_split(k: int, a: int) -> Graph:
    """``K_{1,a,...,a}`` with ``k`` parts of order ``a``."""
    if k < 1 or a < 1:
        raise ConstructionError("complete_split_K1aa needs k >= 1 and a >= 1")
    return complete_multipartite([1] + [a] * k)


def friendship(n: int) -> Graph:
    """Hub ``0`` joined to all, plus a maximum matching on the other vertices.

    For even ``n`` the last vertex is left as a leaf of the hub.
    """
    if n < 1:
        raise ConstructionError("friendship graph needs n >= 1")
    _check_order(n)
    edges = [(0, v) for v in range(1, n)]
    edges += [(v, v + 1) for v in range(1, n - 1, 2)]
    return build_graph(n, edges)


def h_graph(s: int, n: int) -> Graph:
    """Join of ``K_{s-1}`` and the empty graph on ``n - s + 1`` vertices."""
    if not 2 <= s <= n:
        raise ConstructionError(f"h_graph needs 2 <= s <= n, got s={s}, n={n}")
    _check_order(n)
    return join(clique(s - 1), empty_graph(n - s + 1))


def _girth5_feasible_shape(m: int, d: int) -> None:
    if m < 1 or d < 0:
        raise ConstructionError("girth5_almost_regular needs m >= 1 and d >= 0")
    if d >= 2 and m < d * d + 1:
        # Moore bound, applied at a full-degree vertex outside the low vertex's closed neighbourhood
        raise ConstructionError(f"no girth-5 almost {d}-regular graph on {m} vertices (Moore bound)")


def girth5_almost_regular(
    m: int, d: int, seed: int | None = None, budget: int = 20_000, restarts: int = 64
) -> Graph:
    """Girth >= 5 graph on ``m`` vertices, all degrees ``d`` except possibly one ``d - 1``.

    The low vertex exists exactly when ``m * d`` is odd.  Each attempt is a
    backtracking search over edge choices (most constrained vertex first)
    limited to ``budget`` nodes; attempts after the first shuffle the vertex
    order with seeds derived from ``seed``, so the result is deterministic.
    Raises ``ConstructionError`` if one attempt exhausts its search space
    (no such graph) or every attempt runs out of budget.
    """
    _girth5_feasible_shape(m, d)
    _check_order(m)
    base = 0 if seed is None else seed
    for attempt in range(restarts):
        perm = list(range(m))
        if seed is not None or attempt:
            random.Random(base * 1_000_003 + attempt).shuffle(perm)
        g = _girth5_attempt(m, d, perm, budget)
        if g is False:
            raise ConstructionError(f"no girth-5 almost {d}-regular graph on {m} vertices")
        if g is not None:
            return g
    raise ConstructionError(f"girth5_almost_regular({m}, {d}): search budget exhausted")


def _girth5_attempt(m: int, d: int, perm: list[int], budget: int):
    """One bounded search; a Graph, ``False`` if infeasible, ``None`` on budget."""
    need = [d] * m
    if m * d % 2:
        need[m - 1] = d - 1
    rows = [0] * m
    nodes = 0

    def ball3(v: int) -> int:
        seen = 1 << v | rows[v]
        frontier = rows[v]
        for _ in range(2):
            nxt = 0
            x = frontier
            while x:
                low = x & -x
                nxt |= rows[low.bit_length() - 1]
                x ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen

    def solve() -> bool | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return None
        best = -1
        best_c: list[int] = []
        for v in perm:
            if need[v] == 0:
                continue
            blocked = ball3(v)
            c = [w for w in perm if need[w] > 0 and not blocked >> w & 1]
            if len(c) < need[v]:
                return False
            if best < 0 or len(c) - need[v] < len(best_c) - need[best]:
                best, best_c = v, c
        if best < 0:
            return True
        v = best
        best_c.sort(key=lambda w: -need[w])
        for w in best_c:
            rows[v] |= 1 << w
            rows[w] |= 1 << v
            need[v] -= 1
            need[w] -= 1
            res = solve()
            if res is not False:
                if res is None:
                    return None
                return True
            rows[v] &= ~(1 << w)
            rows[w] &= ~(1 << v)
            need[v] += 1
            need[w] += 1
        return False

    res = solve()
    if res is True:
        return Graph(m, tuple(rows))
    return res


def h_prime(s: int, t: int, n: int, seed: int | None = None) -> Graph:
    """``h_graph(s, n)`` with a girth-5 almost (t-1)-regular graph on its independent side."""
    if not 2 <= s <= t:
        raise ConstructionError(f"h_prime needs 2 <= s <= t, got s={s}, t={t}")
    if n < s:
        raise ConstructionError(f"h_prime needs n >= s, got n={n}")
    _check_order(n)
    g0 = girth5_almost_regular(n - s + 1, t - 1, seed=seed)
    return join(clique(s - 1), g0)


def almost_regular(m: int, ell: int) -> Graph:
    """Circulant-style almost ``ell``-regular graph on ``m`` vertices.

    Vertex ``m - 1`` is the one of degree ``ell - 1`` when ``m * ell`` is odd.
    """
    if ell < 0 or m < 1:
        raise ConstructionError("almost_regular needs m >= 1 and ell >= 0")
    if ell == 0:
        return empty_graph(m)
    if m == 1 and ell == 1:
        return empty_graph(1)
    if m < ell + 1:
        raise ConstructionError(f"no almost {ell}-regular graph on {m} vertices")
    edges = set()
    for i in range(m):
        for off in range(1, ell // 2 + 1):
            edges.add(tuple(sorted((i, (i + off) % m))))
    if ell % 2:
        if m % 2 == 0:
            for i in range(m // 2):
                edges.add((i, i + m // 2))
        else:
            half = (m - 1) // 2
            for i in range(half):
                edges.add((i, i + half))
    return build_graph(m, edges)


def t0_member(parts: Sequence[int], a: int) -> Graph:
    """Complete multipartite graph with an almost (a-1)-regular graph inside each part."""
    if a < 1:
        raise ConstructionError("t0_member needs a >= 1")
    base = complete_multipartite(parts)
    rows = list(base.rows)
    offset = 0
    for p in parts:
        inner = almost_regular(p, a - 1)
        for u, v in inner.edges():
            rows[offset + u] |= 1 << (offset + v)
            rows[offset + v] |= 1 << (offset + u)
        offset += p
    return Graph(base.n, tuple(rows))


CLOSURES = ("edge", "path2", "paths3")


def theta_chain(ell: int, width: int = 2, closure: str | None = None) -> Graph:
    """Hubs ``u_1..u_h`` (``h = ceil(ell/3)``) linked by ``width`` disjoint 3-edge paths.

    The closure between ``u_1`` and ``u_h`` is an edge, a 2-edge path or
    ``width`` more 3-edge paths; by default it is the one that makes the
    hub cycle have length ``ell``.
    """
    if ell < 6:
        raise ConstructionError("theta_chain needs ell >= 6")
    if width < 1:
        raise ConstructionError("theta_chain needs width >= 1")
    h = -(-ell // 3)
    if closure is None:
        closure = {0: "paths3", 2: "path2", 1: "edge"}[ell % 3]
    if closure not in CLOSURES:
        raise ConstructionError(f"closure must be one of {CLOSURES}")
    links = [(i, i + 1) for i in range(h - 1)]
    n = h + 2 * width * len(links)
    if closure == "path2":
        n += 1
    elif closure == "paths3":
        n += 2 * width
    _check_order(n)
    edges = []
    nxt = h

    def add_paths(a: int, b: int) -> None:
        nonlocal nxt
        for _ in range(width):
            x, y = nxt, nxt + 1
            nxt += 2
            edges.extend([(a, x), (x, y), (y, b)])

    for a, b in links:
        add_paths(a, b)
    last = h - 1
    if closure == "edge":
        edges.append((0, last))
    elif closure == "path2":
        edges.extend([(0, nxt), (nxt, last)])
        nxt += 1
    else:
        add_paths(last, 0)
    return build_graph(n, edges)


CATALOG = {
    "clique": (clique, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "book_B_k1": (book, 1),
    "complete_split_K1aa": (complete_split, 2),
}


def catalog(name: str, *params: int) -> Graph:
    try:
        fn, arity = CATALOG[name]
    except KeyError:
        raise ConstructionError(f"unknown catalog graph {name!r}; known: {sorted(CATALOG)}") from None
    if len(params) != arity:
        raise ConstructionError(f"{name} takes {arity} parameter(s), got {len(params)}")
    try:
        return fn(*params)
    except GraphError as exc:
        raise ConstructionError(str(exc)) from exc
