"""graph6 and edge-list text formats."""
from __future__ import annotations

from .graph import Graph, GraphError

G6_HEADER = ">>graph6<<"
MAX_G6_N = 258047  # largest n expressible with the 4-byte size field


class FormatError(GraphError):
    def __init__(self, msg: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            msg = f"{msg} (byte {offset})"
        super().__init__(msg)


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise FormatError("empty graph6 string", 0)
    for i, c in enumerate(data[:4]):
        if not 63 <= c <= 126:
            raise FormatError(f"invalid character {c!r} in length header", i)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise FormatError("8-byte length header not supported", 1)
    if len(data) < 4:
        raise FormatError("truncated length header", len(data))
    n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
    if n < 63:
        raise FormatError(f"long length header used for n={n} < 63", 0)
    return n, 4


def _encode_n(n: int) -> bytes:
    if n < 0 or n > MAX_G6_N:
        raise FormatError(f"n={n} outside the supported graph6 range 0..{MAX_G6_N}")
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (trailing newline and ``>>graph6<<`` prefix allowed)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    start = 0
    if data.startswith(G6_HEADER.encode()):
        start = len(G6_HEADER)
        data = data[start:]
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise FormatError(f"string too short for n={n}: need {nbytes} data bytes, have {len(body)}",
                          start + len(data))
    if len(body) > nbytes:
        raise FormatError(f"unexpected trailing data for n={n}", start + pos + nbytes)
    for i, c in enumerate(body):
        if not 63 <= c <= 126:
            raise FormatError(f"invalid character {c!r} in edge data", start + pos + i)
    pad = nbytes * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits", start + pos + nbytes - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if ((body[k // 6] - 63) >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def write_graph6(g: Graph) -> str:
    """Shortest graph6 encoding of ``g`` (no header, no newline)."""
    out = bytearray(_encode_n(g.n))
    nbits = g.n * (g.n - 1) // 2
    acc = 0
    k = 0
    adj = g._nbr_sets
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (i in row)
            k += 1
            if k % 6 == 0:
                out.append(acc + 63)
                acc = 0
    if nbits % 6:
        out.append((acc << (6 - nbits % 6)) + 63)
    return out.decode("ascii")


def iter_graph6_lines(lines):
    """Yield ``(line_number, Graph)`` for the non-blank lines of a graph6 stream."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if line:
            yield lineno, parse_graph6(line)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [(i + 1, toks) for i, toks in enumerate(lines) if toks]
    if not lines or lines[0][1][0] != "n" or len(lines[0][1]) != 2:
        raise FormatError("edge list must start with a line 'n <count>'")
    try:
        n = int(lines[0][1][1])
    except ValueError:
        raise FormatError(f"line {lines[0][0]}: non-integer vertex count") from None
    if n < 0:
        raise FormatError(f"line {lines[0][0]}: negative vertex count")
    edges = []
    for lineno, toks in lines[1:]:
        if len(toks) != 2:
            raise FormatError(f"line {lineno}: expected two vertex ids, got {len(toks)} tokens")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer token") from None
        if u == v:
            raise FormatError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    return "".join([f"n {g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges()])
