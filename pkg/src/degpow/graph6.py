"""graph6 text encoding (order prefix, then 6-bit packed upper triangle)."""

from __future__ import annotations

from .graph import MAX_ORDER, Graph, GraphError, build_graph, parse_edge_list

HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    # 63 <= n < 2**18: '~' then three 6-bit groups
    return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [_encode_order(g.n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = v << 1 | b
        out.append(chr(63 + v))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise GraphError(f"invalid graph6 character in {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("unsupported graph6 order prefix")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has wrong length for n={n}")
    bits = [x >> s & 1 for x in body for s in range(5, -1, -1)]
    if any(bits[nbits:]):
        raise GraphError("nonzero graph6 padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Accept either graph6 or the ``"n: u-v,..."`` edge-list form."""
    if ":" in text and not text.strip().startswith(HEADER):
        return parse_edge_list(text)
    return graph6_decode(text)
