"""Forbidden-pattern containment: fast named checkers + generic matcher.

Containment is non-induced throughout: an embedding must map pattern
edges to host edges and nothing more.  Named checkers and the generic
backtracking matcher agree (differential-tested); witnesses are
deterministic for a fixed host labelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .graph import Graph, bits
from .families import complete, cycle, edge_blowup, matching, path

NAMED_KINDS = ("C33", "P33", "M23", "K5", "K5minus")

GENERIC_BUDGET = 16


class PatternTooLarge(ValueError):
    """Explicit pattern above the generic matcher budget."""


@dataclass(frozen=True)
class Pattern:
    kind: str
    graph: Graph | None = None

    @staticmethod
    def named(kind: str) -> "Pattern":
        if kind not in NAMED_KINDS:
            raise ValueError(f"unknown named pattern {kind!r}")
        return Pattern(kind)

    @staticmethod
    def explicit(g: Graph) -> "Pattern":
        if g.n > GENERIC_BUDGET:
            raise PatternTooLarge(f"pattern on {g.n} > {GENERIC_BUDGET} vertices")
        return Pattern("explicit", g)

    def __hash__(self):
        return hash((self.kind, self.graph))


@dataclass(frozen=True)
class Embedding:
    """Pattern vertex i maps to host vertex mapping[i]."""

    kind: str
    mapping: tuple


@lru_cache(maxsize=None)
def _named_graph(kind: str) -> Graph:
    if kind == "C33":
        return edge_blowup(cycle(3), 3)
    if kind == "P33":
        return edge_blowup(path(3), 3)
    if kind == "M23":
        return edge_blowup(matching(2), 3)
    if kind == "K5":
        return complete(5)
    if kind == "K5minus":
        g = complete(5)
        g.remove_edge(3, 4)
        return g
    raise ValueError(f"unknown named pattern {kind!r}")


def pattern_graph(p) -> Graph:
    p = as_pattern(p)
    return p.graph if p.kind == "explicit" else _named_graph(p.kind)


def as_pattern(p) -> Pattern:
    if isinstance(p, Pattern):
        return p
    if isinstance(p, Graph):
        return Pattern.explicit(p)
    if isinstance(p, str):
        return Pattern.named(p)
    raise TypeError(f"cannot interpret {p!r} as a pattern")


def embedding_ok(host: Graph, p, emb: Embedding) -> bool:
    """Every pattern edge maps to a host edge; mapping injective."""
    pg = pattern_graph(p)
    m = emb.mapping
    if len(set(m)) != len(m) or len(m) != pg.n:
        return False
    return all(host.has_edge(m[u], m[v]) for u, v in pg.edges())


def _all_triangles_share_a_vertex(g: Graph) -> bool:
    """True if t(G) = 0 or some vertex lies in every triangle.

    Every named pattern's triangles have empty common intersection, so a
    shared vertex in the host rules all of them out.
    """
    st = g.stats()
    if st.total == 0:
        return True
    return any(tv == st.total for tv in st.per_vertex)


# -- named checkers ---------------------------------------------------------


def contains_c33(g: Graph):
    w = _kernels.c33_witness(g.adj, g.n)
    if w is None:
        return None
    x, y, z, a, b, c = w
    return Embedding("C33", (x, y, z, a, c, b))


def contains_p33(g: Graph):
    if _all_triangles_share_a_vertex(g):
        return None
    w = _kernels.p33_witness(g.adj, g.n)
    if w is None:
        return None
    return Embedding("P33", w)


def contains_m23(g: Graph):
    """Two vertex-disjoint triangles."""
    if _all_triangles_share_a_vertex(g):
        return None
    tris = g.triangles()
    masks = [(1 << a) | (1 << b) | (1 << c) for a, b, c in tris]
    for i, ti in enumerate(tris):
        mi = masks[i]
        for j in range(i + 1, len(tris)):
            if not mi & masks[j]:
                tj = tris[j]
                return Embedding(
                    "M23", (ti[0], ti[1], tj[0], tj[1], ti[2], tj[2])
                )
    return None


def _five_clique_core(g: Graph, need_edge: bool):
    # K_5^- = triangle + two common neighbours; K_5 needs them adjacent too
    adj = g.adj
    for x, y, z in g.triangles():
        m = adj[x] & adj[y] & adj[z]
        if m.bit_count() < 2:
            continue
        cand = list(bits(m))
        for i, u in enumerate(cand):
            for v in cand[i + 1:]:
                if not need_edge or adj[u] >> v & 1:
                    return x, y, z, u, v
    return None


def contains_k5_minus(g: Graph):
    """Five vertices spanning at least 9 of the 10 possible edges."""
    w = _five_clique_core(g, need_edge=False)
    if w is None:
        return None
    return Embedding("K5minus", w)


def contains_k5(g: Graph):
    w = _five_clique_core(g, need_edge=True)
    if w is None:
        return None
    return Embedding("K5", w)


# -- generic backtracking matcher -------------------------------------------


def _match_order(pg: Graph):
    """Pattern vertices by descending degree, connectivity-first."""
    degs = [pg.degree(v) for v in range(pg.n)]
    order = [max(range(pg.n), key=lambda v: (degs[v], -v))]
    placed = set(order)
    while len(order) < pg.n:
        best = max(
            (v for v in range(pg.n) if v not in placed),
            key=lambda v: (
                sum(1 for w in bits(pg.adj[v]) if w in placed),
                degs[v],
                -v,
            ),
        )
        order.append(best)
        placed.add(best)
    return order


def generic_contains(g: Graph, pg: Graph):
    """Backtracking subgraph (non-induced) matcher, pattern <= 16 vertices."""
    if pg.n > GENERIC_BUDGET:
        raise PatternTooLarge(f"pattern on {pg.n} > {GENERIC_BUDGET} vertices")
    if pg.n > g.n:
        return None
    order = _match_order(pg)
    pdeg = [pg.degree(v) for v in range(pg.n)]
    hdeg = [g.degree(v) for v in range(g.n)]
    # for each position, pattern neighbours already placed
    back = []
    for i, v in enumerate(order):
        back.append([(j, order[j]) for j in range(i) if pg.has_edge(v, order[j])])

    image = [0] * pg.n
    used = 0

    def extend(i):
        nonlocal used
        if i == pg.n:
            return True
        v = order[i]
        cand = ~used
        for j, _ in back[i]:
            cand &= g.adj[image[j]]
        if not back[i]:
            cand &= (1 << g.n) - 1
        for h in bits(cand):
            if hdeg[h] < pdeg[v]:
                continue
            image[i] = h
            used |= 1 << h
            if extend(i + 1):
                return True
            used &= ~(1 << h)
        return False

    if not extend(0):
        return None
    mapping = [0] * pg.n
    for i, v in enumerate(order):
        mapping[v] = image[i]
    return Embedding("explicit", tuple(mapping))


_NAMED_CHECKERS = {
    "C33": contains_c33,
    "P33": contains_p33,
    "M23": contains_m23,
    "K5": contains_k5,
    "K5minus": contains_k5_minus,
}


def contains(g: Graph, p):
    """Witness embedding of the pattern in g, or None."""
    p = as_pattern(p)
    if p.kind == "explicit":
        return generic_contains(g, p.graph)
    return _NAMED_CHECKERS[p.kind](g)


def is_free(g: Graph, p) -> bool:
    return contains(g, p) is None


# -- incremental checks used by local search --------------------------------


def creates_pattern(g: Graph, p, u: int, v: int) -> bool:
    """Would adding edge uv to the (pattern-free) graph g create the pattern?

    g must not already contain the edge.  For C33/P33 this uses a
    localized scan around the new edge; other patterns fall back to a
    full containment check on the augmented graph.
    """
    p = as_pattern(p)
    g.adj[u] |= 1 << v
    g.adj[v] |= 1 << u
    g._stats = None
    try:
        if p.kind == "C33":
            return _kernels.c33_witness_touching(g.adj, g.n, u, v) is not None
        if p.kind == "P33":
            return _kernels.p33_witness_touching(g.adj, g.n, u, v) is not None
        return contains(g, p) is not None
    finally:
        g.adj[u] &= ~(1 << v)
        g.adj[v] &= ~(1 << u)
        g._stats = None
