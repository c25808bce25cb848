"""Graph file formats: plain edge lists and graph6.

Edge-list text is an ``n m`` header followed by ``m`` lines ``u v``; blank
lines and ``#`` comments are ignored.  graph6 follows the published byte
layout: N(n) then the upper triangle packed column by column into 6-bit
groups offset by 63.
"""

from __future__ import annotations

from pathlib import Path

from .errors import GraphFormatError
from .graphcore import Graph


def parse_edge_list(text: str, directed: bool = False) -> Graph:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphFormatError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token in edge list: {exc}") from exc
    if len(header) != 2:
        raise GraphFormatError("edge list header must be 'n m'")
    n, m = header
    if any(len(p) != 2 for p in pairs):
        raise GraphFormatError("edge lines must hold exactly two vertices")
    if len(pairs) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(pairs)}")
    try:
        return Graph.from_edges(n, pairs, directed)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def format_edge_list(X: Graph) -> str:
    edges = X.edges()
    lines = [f"{X.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _encode_n(n: int) -> str:
    if n < 0:
        raise GraphFormatError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphFormatError("order too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, number of bytes consumed)."""
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        chunk, used = data[2:8], 8
    else:
        chunk, used = data[1:4], 4
    if len(chunk) != used - (2 if used == 8 else 1):
        raise GraphFormatError("truncated graph6 size field")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, used


def to_graph6(X: Graph, header: bool = False) -> str:
    if X.directed:
        raise GraphFormatError("graph6 encodes undirected graphs only")
    bits = []
    for j in range(1, X.n):
        for i in range(j):
            bits.append(1 if X.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2))
                   for k in range(0, len(bits), 6))
    return (">>graph6<<" if header else "") + _encode_n(X.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s or s[0] in ":;&":
        raise GraphFormatError("not a graph6 string (sparse6/digraph6 are not supported)")
    data = s.encode("ascii", errors="strict") if s.isascii() else None
    if data is None or any(not 63 <= c <= 126 for c in data):
        raise GraphFormatError("graph6 characters must lie in 63..126")
    n, used = _decode_n(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 body length {len(body)} does not match n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph(path: str | Path) -> Graph:
    """Read a graph file; ``.g6`` means graph6, anything else an edge list."""
    path = Path(path)
    try:
        text = path.read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphFormatError(f"{path}: {exc}") from exc
    try:
        if path.suffix == ".g6":
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) != 1:
                raise GraphFormatError("expected exactly one graph6 line")
            return parse_graph6(lines[0])
        return parse_edge_list(text)
    except GraphFormatError as exc:
        raise GraphFormatError(f"{path}: {exc}") from exc


def write_graph(X: Graph, path: str | Path, fmt: str = "g6") -> None:
    path = Path(path)
    if fmt == "g6":
        path.write_text(to_graph6(X) + "\n")
    elif fmt == "edges":
        path.write_text(format_edge_list(X))
    else:
        raise GraphFormatError(f"unknown format {fmt!r}")
