"""graph6 / sparse6 / edge-list text formats.

graph6 follows the nauty format description: an ``N(n)`` size prefix, then
the upper triangle of the adjacency matrix in column order
(``x(0,1) x(0,2) x(1,2) x(0,3) ...``), six bits per printable byte.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import GraphInputError
from .graph import Graph, from_edge_list

_HEADER6 = ">>graph6<<"
_HEADERS6 = ">>sparse6<<"


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphInputError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        chunk = data[2:8]
        width = 6
        offset = 8
    else:
        chunk = data[1:4]
        width = 3
        offset = 4
    if len(chunk) != width:
        raise GraphInputError("truncated graph6 size field")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, offset


def _check_bytes(data: bytes) -> None:
    for c in data:
        if not 63 <= c <= 126:
            raise GraphInputError(f"invalid graph6 byte {c!r}")


def to_graph6(g: Graph) -> str:
    out = [_encode_size(g.n)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = (acc << 1) | (g.masks[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(line: str | bytes) -> Graph:
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(_HEADER6.encode()):
        data = data[len(_HEADER6):]
    _check_bytes(data)
    n, pos = _decode_size(data)
    body = data[pos:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphInputError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    total = n * (n - 1) // 2
    v, u = 1, 0
    for c in body:
        val = c - 63
        for shift in range(5, -1, -1):
            if k >= total:
                break
            if val >> shift & 1:
                edges.append((u, v))
            k += 1
            u += 1
            if u == v:
                v += 1
                u = 0
    return from_edge_list(n, edges)


def from_sparse6(line: str | bytes) -> Graph:
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(_HEADERS6.encode()):
        data = data[len(_HEADERS6):]
    if not data.startswith(b":"):
        raise GraphInputError("sparse6 strings start with ':'")
    data = data[1:]
    _check_bytes(data)
    n, pos = _decode_size(data)
    k = max(1, (n - 1).bit_length())
    stream = []
    for c in data[pos:]:
        val = c - 63
        stream.extend((val >> s) & 1 for s in range(5, -1, -1))
    edges = set()
    v = 0
    i = 0
    while i + 1 + k <= len(stream):
        b = stream[i]
        x = 0
        for bit in stream[i + 1:i + 1 + k]:
            x = (x << 1) | bit
        i += 1 + k
        if b:
            v += 1
        if v >= n:
            break
        if x > v:
            v = x
        elif x != v:
            edges.add((x, v))
    return from_edge_list(n, sorted(edges))


def parse_line(line: str) -> Graph:
    """Decode one graph6 or sparse6 line."""
    text = line.strip()
    if text.startswith(":") or text.startswith(_HEADERS6):
        return from_sparse6(text)
    return from_graph6(text)


def read_graph6(stream: TextIO | Iterable[str]) -> Iterator[Graph]:
    for line in stream:
        if line.strip():
            yield parse_line(line)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    rows = [r.split() for r in text.splitlines() if r.strip() and not r.lstrip().startswith("#")]
    if not rows:
        raise GraphInputError("empty edge-list input")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphInputError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphInputError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)
