"""graph6 text encoding of undirected simple graphs.

Format: a size header (one char 63+n for n <= 62, '~' + 18 bits for
n <= 258047, '~~' + 36 bits above), then the upper triangle of the
adjacency matrix read column by column (x01, x02, x12, x03, ...) packed
six bits per printable character, offset by 63, zero padded.
"""

from __future__ import annotations

from .graph import Graph


class Graph6Error(ValueError):
    """Malformed graph6 input."""


_MAX_N = 68719476735  # 2^36 - 1


def encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    elif n <= 258047:
        head = "~" + "".join(
            chr(63 + (n >> s & 63)) for s in (12, 6, 0)
        )
    elif n <= _MAX_N:
        head = "~~" + "".join(
            chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0)
        )
    else:
        raise Graph6Error(f"n={n} not encodable")
    chunk = 0
    nbits = 0
    body = []
    for v in range(n):
        col = g.adj[v]
        for u in range(v):
            chunk = (chunk << 1) | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                body.append(chr(63 + chunk))
                chunk = 0
                nbits = 0
    if nbits:
        body.append(chr(63 + (chunk << (6 - nbits))))
    return head + "".join(body)


def decode(text: str) -> Graph:
    if not text:
        raise Graph6Error("empty graph6 string")
    data = []
    for ch in text:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"non-printable graph6 character {ch!r}")
        data.append(o - 63)
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        body = data[8:]
    else:
        raise Graph6Error("truncated graph6 header")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(
            f"graph6 body for n={n} needs {need} characters, got {len(body)}"
        )
    g = Graph(n)
    i = 0
    for v in range(n):
        for u in range(v):
            if body[i // 6] >> (5 - i % 6) & 1:
                g.add_edge(u, v)
            i += 1
    if nbits % 6:
        tail = body[-1] & ((1 << (6 - nbits % 6)) - 1)
        if tail:
            raise Graph6Error("nonzero padding bits")
    return g
