"""graph6 encoding (McKay's format) for simple undirected graphs."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .errors import Graph6Error
from .graphs import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return ``(n, bytes consumed)``."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return (HEADER if header else "") + _encode_n(g.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise Graph6Error(f"non-ASCII character in {text!r}") from None
    if any(b < 63 or b > 126 for b in data):
        raise Graph6Error(f"invalid graph6 character in {text!r}")
    n, k = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[k:]
    if len(body) != need:
        kind = "truncated" if len(body) < need else "overlong"
        raise Graph6Error(f"{kind} bit stream: expected {need} bytes, got {len(body)}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[pos // 6] - 63
            if (byte >> (5 - pos % 6)) & 1:
                edges.append((i, j))
            pos += 1
    return Graph(n, tuple(edges))


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    """Yield graphs from a newline-delimited graph6 file, skipping blank lines."""
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield parse_graph6(line)


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
