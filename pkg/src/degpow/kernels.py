"""Numeric inner loops: subgraph embedding and the labeled-graph sweep.

All kernels take plain numpy arrays so the same source runs under numba or
as ordinary Python (see ``_accel``).  Graph arguments come in three arrays:
``adj`` (bool n x n), ``nbr`` (int64 n x n, row v lists v's neighbours in its
first ``deg[v]`` slots) and ``deg`` (int64 n).
"""

from __future__ import annotations

import numpy as np

from ._accel import kernel


@kernel
def embed_count(order, parent, hadj, hdeg, gadj, gnbr, gdeg, anchor, stop_first):
    """Count injective edge-preserving maps of the pattern into the host.

    ``order`` lists pattern vertices in placement order; ``parent[i]`` is the
    position of an earlier pattern neighbour of ``order[i]`` (or -1), whose
    image's neighbour list supplies the candidates.  If ``anchor >= 0`` the
    first pattern vertex is pinned to that host vertex.
    """
    k = order.shape[0]
    n = gdeg.shape[0]
    if k == 0:
        return 1
    if k > n:
        return 0
    image = np.full(k, -1, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    ptr = np.zeros(k, dtype=np.int64)
    count = 0
    level = 0
    while level >= 0:
        h = order[level]
        p = parent[level]
        found = -1
        while True:
            i = ptr[level]
            if level == 0 and anchor >= 0:
                if i >= 1:
                    break
                x = anchor
            elif p >= 0:
                if i >= gdeg[image[p]]:
                    break
                x = gnbr[image[p], i]
            else:
                if i >= n:
                    break
                x = i
            ptr[level] = i + 1
            if used[x] or gdeg[x] < hdeg[h]:
                continue
            ok = True
            for j in range(level):
                if hadj[h, order[j]] and not gadj[x, image[j]]:
                    ok = False
                    break
            if ok:
                found = x
                break
        if found < 0:
            level -= 1
            if level >= 0:
                used[image[level]] = False
                image[level] = -1
            continue
        if level == k - 1:
            count += 1
            if stop_first:
                return count
            continue
        image[level] = found
        used[found] = True
        level += 1
        ptr[level] = 0
    return count


@kernel
def contains_any(fam_order, fam_parent, fam_hadj, fam_hdeg, fam_k, gadj, gnbr, gdeg):
    """Index of the first family member embedded in the host, else -1."""
    for m in range(fam_k.shape[0]):
        k = fam_k[m]
        if embed_count(
            fam_order[m, :k], fam_parent[m, :k], fam_hadj[m], fam_hdeg[m],
            gadj, gnbr, gdeg, -1, True,
        ) > 0:
            return m
    return -1


@kernel
def sweep_free_masks(n, pu, pv, fam_order, fam_parent, fam_hadj, fam_hdeg, fam_k, fam_edges):
    """Flag every labeled graph on ``n`` vertices that avoids the family.

    Bit ``b`` of mask ``x`` selects edge ``(pu[b], pv[b])``.
    """
    m = pu.shape[0]
    total = 1 << m
    out = np.zeros(total, dtype=np.bool_)
    gadj = np.zeros((n, n), dtype=np.bool_)
    gnbr = np.zeros((n, n), dtype=np.int64)
    gdeg = np.zeros(n, dtype=np.int64)
    for x in range(total):
        gadj[:, :] = False
        gdeg[:] = 0
        ne = 0
        for b in range(m):
            if (x >> b) & 1:
                u = pu[b]
                w = pv[b]
                gadj[u, w] = True
                gadj[w, u] = True
                gnbr[u, gdeg[u]] = w
                gdeg[u] += 1
                gnbr[w, gdeg[w]] = u
                gdeg[w] += 1
                ne += 1
        free = True
        for f in range(fam_k.shape[0]):
            if fam_edges[f] > ne:
                continue
            k = fam_k[f]
            if embed_count(
                fam_order[f, :k], fam_parent[f, :k], fam_hadj[f], fam_hdeg[f],
                gadj, gnbr, gdeg, -1, True,
            ) > 0:
                free = False
                break
        out[x] = free
    return out


def host_arrays(rows: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Kernel-side arrays for a graph given as row bitsets."""
    n = len(rows)
    adj = np.zeros((n, n), dtype=np.bool_)
    nbr = np.zeros((n, max(n, 1)), dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    for v, row in enumerate(rows):
        d = 0
        while row:
            low = row & -row
            u = low.bit_length() - 1
            adj[v, u] = True
            nbr[v, d] = u
            d += 1
            row ^= low
        deg[v] = d
    return adj, nbr, deg
