"""Edge-list text and graph6 byte formats.

Edge list::

    # comments and blank lines are ignored
    n m
    u v        (m lines, 0-based ids)

graph6 follows the format description shipped with nauty: a size field
N(n) followed by the upper triangle of the adjacency matrix, column by
column, packed into 6-bit groups each offset by 63.
"""

from __future__ import annotations

from .graph import Graph


class ParseError(ValueError):
    pass


class SelfLoopError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class EdgeCountError(ParseError):
    pass


class Graph6Error(ParseError):
    pass


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {line!r}") from None
    if not rows:
        raise ParseError("missing 'n m' header")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise ParseError("header values must be non-negative")
    edges = rows[1:]
    if len(edges) != m:
        raise EdgeCountError(f"header declares {m} edges, found {len(edges)}")
    seen = set()
    for lineno, u, v in edges:
        if u == v:
            raise SelfLoopError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"line {lineno}: edge ({u}, {v}) outside 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
    return Graph.from_edges(n, seen)


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"graph too large for graph6: n={n}")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, offset of the adjacency bytes)."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def emit_graph6(g: Graph) -> bytes:
    n = g.n
    bits = []
    for j in range(1, n):
        nb = g.adj[j]
        for i in range(j):
            bits.append(1 if i in nb else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytearray()
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return _encode_size(n) + bytes(body)


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside 63..126")
    n, off = _decode_size(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - off != need:
        raise Graph6Error(f"expected {need} adjacency bytes for n={n}, got {len(data) - off}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[off + pos // 6] - 63
            if byte >> (5 - pos % 6) & 1:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)
