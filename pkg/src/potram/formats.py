"""graph6 and plain edge-list serialization."""

from __future__ import annotations

from .errors import InputError
from .graph import Graph

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chunks.append(chr(val + 63))
    return _encode_n(g.n) + "".join(chunks)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise InputError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= v <= 63 for v in vals):
        raise InputError(f"invalid graph6 character in {text!r}")
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] != 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    else:
        raise InputError(f"truncated graph6 size field in {text!r}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise InputError(f"graph6 body length mismatch for n={n} in {text!r}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise InputError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise InputError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise InputError(f"edge list declares {m} edges but has {len(edges)}")
    g = Graph(n, edges)
    if g.m != m:
        raise InputError("edge list contains repeated edges")
    return g
