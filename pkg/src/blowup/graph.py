"""Compact undirected simple graphs with exact triangle statistics.

Adjacency is stored as one Python-int bitset per vertex.  The triangle
kernels (total count, per-vertex counts) go through :mod:`blowup._kernels`,
which dispatches to the compiled core when it is available.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels

DEFAULT_CAP = 512

_vertex_cap = DEFAULT_CAP


class CapExceeded(ValueError):
    """Requested vertex count is above the configured cap."""


class LoopForbidden(ValueError):
    """Loops are not representable in a simple graph."""


def set_vertex_cap(cap: int) -> None:
    """Override the global vertex cap (default 512)."""
    global _vertex_cap
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    _vertex_cap = cap


def vertex_cap() -> int:
    return _vertex_cap


def bits(x):
    """Yield the indices of set bits of ``x`` in ascending order."""
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


@dataclass(frozen=True)
class TriangleStats:
    """t(G) together with the vector of t(v)."""

    total: int
    per_vertex: tuple


class Graph:
    """Simple undirected graph on vertices 0..n-1, adjacency-row bitsets."""

    __slots__ = ("n", "adj", "_stats")

    def __init__(self, n: int, rows=None):
        if n < 0:
            raise ValueError("negative vertex count")
        if n > _vertex_cap:
            raise CapExceeded(f"n={n} above cap {_vertex_cap}")
        self.n = n
        self.adj = list(rows) if rows is not None else [0] * n
        self._stats = None

    # -- basics ----------------------------------------------------------

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range 0..{self.n - 1}")

    def copy(self) -> "Graph":
        return Graph(self.n, self.adj)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def add_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v:
            raise LoopForbidden(f"loop at vertex {u}")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u
        self._stats = None

    def remove_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)
        self._stats = None

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int):
        self._check(v)
        return list(bits(self.adj[v]))

    def edges(self):
        """Iterate edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def __repr__(self):
        return f"Graph(n={self.n}, e={self.edge_count})"

    # -- triangles -------------------------------------------------------

    def common_mask(self, u: int, v: int) -> int:
        self._check(u)
        self._check(v)
        return self.adj[u] & self.adj[v]

    def common_neighbors(self, u: int, v: int):
        """N(u) & N(v); for an edge uv its size counts triangles on uv."""
        if u == v:
            raise ValueError("common_neighbors needs two distinct vertices")
        return list(bits(self.common_mask(u, v)))

    def triangles(self):
        """All triangles as sorted triples, lexicographic order."""
        out = []
        adj = self.adj
        for u in range(self.n):
            ru = adj[u]
            for v in bits(ru >> (u + 1)):
                v += u + 1
                m = (ru & adj[v]) >> (v + 1)
                for w in bits(m):
                    out.append((u, v, v + 1 + w))
        return out

    def stats(self) -> TriangleStats:
        if self._stats is None:
            total = _kernels.triangle_total(self.adj, self.n)
            per = tuple(_kernels.triangle_per_vertex(self.adj, self.n))
            self._stats = TriangleStats(total, per)
        return self._stats

    def triangle_count(self) -> int:
        return self.stats().total

    def triangles_at(self, v: int) -> int:
        self._check(v)
        return self.stats().per_vertex[v]

    def triangles_at_pair(self, u: int, v: int) -> int:
        """t(u, v): triangles containing u or v or both."""
        if u == v:
            raise ValueError("triangles_at_pair needs two distinct vertices")
        st = self.stats()
        both = self.common_mask(u, v).bit_count() if self.has_edge(u, v) else 0
        return st.per_vertex[u] + st.per_vertex[v] - both


# -- constructors and graph algebra ---------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def from_edges(n: int, edges) -> Graph:
    g = Graph(n)
    for u, v in edges:
        g.add_edge(u, v)
    return g


def join(g: Graph, h: Graph) -> Graph:
    """G + H: disjoint union plus all cross edges; H shifted by v(G)."""
    out = disjoint_union(g, h)
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    for u in range(g.n):
        out.adj[u] |= hmask
    for u in range(g.n, out.n):
        out.adj[u] |= gmask
    out._stats = None
    return out


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [r << g.n for r in h.adj]
    return Graph(g.n + h.n, rows)


def induced_subgraph(g: Graph, keep) -> Graph:
    """G[S], kept vertices relabelled densely preserving relative order."""
    keep = sorted(set(keep))
    for v in keep:
        g._check(v)
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in bits(g.adj[v]):
            if w in pos:
                row |= 1 << pos[w]
        rows.append(row)
    return Graph(len(keep), rows)


def delete_vertices(g: Graph, drop) -> Graph:
    drop = set(drop)
    for v in drop:
        g._check(v)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def clean(g: Graph) -> Graph:
    """Delete edges lying in no triangle until none remain.

    The fixed point is unique: removing an edge in no triangle never
    destroys a triangle, so the surviving edge set does not depend on
    the deletion order.  Triangle count is preserved.
    """
    out = g.copy()
    changed = True
    while changed:
        changed = False
        for u, v in list(out.edges()):
            if not out.common_mask(u, v):
                out.remove_edge(u, v)
                changed = True
    return out
