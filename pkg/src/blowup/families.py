"""Builders for named graph families and the extremal constructions.

Vertex layouts are deterministic so that canonical forms, graph6 output
and golden tests are reproducible:

* path with k edges: vertices 0..k in path order
* cycle with k edges: vertices 0..k-1 in cyclic order
* matching with k edges: edge i = (2i, 2i+1)
* star with k edges: centre 0, leaves 1..k
* complete bipartite K_{s,t}: first side 0..s-1, second side s..s+t-1
* Turan graph T_p(m): parts as equal as possible, larger parts first
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, disjoint_union, empty_graph, join


@dataclass(frozen=True)
class FamilySpec:
    """A named family with integer parameters, e.g. ('matching', (3,))."""

    kind: str
    params: tuple

    def build(self) -> Graph:
        return build(self)


def matching(k: int) -> Graph:
    if k < 1:
        raise ValueError("matching needs k >= 1")
    g = Graph(2 * k)
    for i in range(k):
        g.add_edge(2 * i, 2 * i + 1)
    return g


def star(k: int) -> Graph:
    if k < 1:
        raise ValueError("star needs k >= 1")
    g = Graph(k + 1)
    for i in range(1, k + 1):
        g.add_edge(0, i)
    return g


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("path needs k >= 1")
    g = Graph(k + 1)
    for i in range(k):
        g.add_edge(i, i + 1)
    return g


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs k >= 3")
    g = Graph(k)
    for i in range(k):
        g.add_edge(i, (i + 1) % k)
    return g


def complete(t: int) -> Graph:
    g = Graph(t)
    for u in range(t):
        for v in range(u + 1, t):
            g.add_edge(u, v)
    return g


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 0 or t < 0:
        raise ValueError("part sizes must be nonnegative")
    g = Graph(s + t)
    for u in range(s):
        for v in range(s, s + t):
            g.add_edge(u, v)
    return g


def turan_graph(p: int, m: int) -> Graph:
    """Complete p-partite graph on m vertices, parts as equal as possible."""
    if p < 1 or m < 0:
        raise ValueError("turan graph needs p >= 1, m >= 0")
    q, r = divmod(m, p)
    sizes = [q + 1] * r + [q] * (p - r)
    bounds = []
    start = 0
    for s in sizes:
        bounds.append((start, start + s))
        start += s
    g = Graph(m)
    for i, (a0, a1) in enumerate(bounds):
        for b0, b1 in bounds[i + 1:]:
            for u in range(a0, a1):
                for v in range(b0, b1):
                    g.add_edge(u, v)
    return g


def turan_part_sizes(p: int, m: int):
    q, r = divmod(m, p)
    return [q + 1] * r + [q] * (p - r)


_BUILDERS = {
    "matching": matching,
    "star": star,
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "bipartite": complete_bipartite,
    "empty": empty_graph,
    "turan": turan_graph,
}


def build(spec: FamilySpec) -> Graph:
    try:
        builder = _BUILDERS[spec.kind]
    except KeyError:
        raise ValueError(f"unknown family kind {spec.kind!r}") from None
    return builder(*spec.params)


def edge_blowup(h: Graph, p: int) -> Graph:
    """Replace each edge of h with a K_p whose p-2 new vertices are private.

    Original vertices keep their indices; the new block for the i-th edge
    (lexicographic order) occupies indices v(h)+i(p-2) .. v(h)+(i+1)(p-2)-1.
    """
    if p < 3:
        raise ValueError("edge blow-up needs p >= 3")
    edges = list(h.edges())
    g = Graph(h.n + len(edges) * (p - 2))
    base = h.n
    for u, v in edges:
        block = [u, v] + list(range(base, base + p - 2))
        base += p - 2
        for i, a in enumerate(block):
            for b in block[i + 1:]:
                g.add_edge(a, b)
    return g


# -- extremal constructions -------------------------------------------------


def _matching_plus_k1(k: int) -> Graph:
    return disjoint_union(matching(k), empty_graph(1))


def thm1_variant_count(n: int) -> int:
    return {0: 1, 1: 2, 2: 3, 3: 2}[n % 4]


def thm1_extremal(n: int, variant: int = 0) -> Graph:
    """The listed edge-extremal C_3^3-free graphs on n >= 6 vertices.

    Variant indexing follows the order the families are listed for each
    residue of n mod 4; the ordering itself is an artifact convention.
    """
    if n < 6:
        raise ValueError("thm1_extremal needs n >= 6")
    if not 0 <= variant < thm1_variant_count(n):
        raise ValueError(f"variant {variant} out of range for n={n}")
    r = n % 4
    if r == 0:
        return join(matching(n // 4), matching(n // 4))
    if r == 1:
        if variant == 0:
            return join(_matching_plus_k1(n // 4), matching((n - 1) // 4))
        return join(star(n // 2), empty_graph(n // 2))
    if r == 2:
        if variant == 0:
            return join(_matching_plus_k1(n // 4), _matching_plus_k1(n // 4))
        if variant == 1:
            return join(matching(n // 4 + 1), matching(n // 4))
        return join(star(n // 2 - 1), empty_graph(n // 2))
    if variant == 0:
        return join(_matching_plus_k1(n // 4), matching(n // 4 + 1))
    return join(star(n // 2), empty_graph(n // 2))


def thm2_extremal(n: int) -> Graph:
    """Join of two near-equal matchings; triangle-extremal C_3^3-free graph.

    Only defined for even n: the triangle bound is attained (and the
    extremal graph characterized) only in the even case.
    """
    if n % 2:
        raise ValueError("thm2_extremal is defined for even n only")
    if n < 8:
        raise ValueError("thm2_extremal needs n >= 8")
    return join(matching((n + 2) // 4), matching(n // 4))


def thm3_extremal(n: int) -> Graph:
    """Apex over a balanced complete bipartite graph on n-1 vertices."""
    if n < 3:
        raise ValueError("thm3_extremal needs n >= 3")
    return join(empty_graph(1), complete_bipartite((n - 1) // 2, n // 2))


def h_npt(n: int, p: int, t: int) -> Graph:
    """K_{t-1} joined to the Turan graph T_p(n-t+1)."""
    if not (n >= t >= 1 and p >= 2):
        raise ValueError("h_npt needs n >= t >= 1 and p >= 2")
    return join(complete(t - 1), turan_graph(p, n - t + 1))


def h_plus(n: int, p: int, t: int) -> Graph:
    """h_npt with one extra edge inside the largest Turan class.

    The edge joins the two lowest-indexed vertices of the first (largest)
    class; all choices are isomorphic, this one is fixed for determinism.
    """
    g = h_npt(n, p, t)
    first = turan_part_sizes(p, n - t + 1)[0]
    if first < 2:
        raise ValueError("largest Turan class too small for the extra edge")
    g.add_edge(t - 1, t)
    return g
