"""Canonical forms: minimal adjacency upper-triangle bitstring.

The canonical form of a graph is the lexicographically least packed
upper-triangle bitstring (column-major, the graph6 bit order) over all
vertex orderings.  Two graphs have equal canonical form iff they are
isomorphic.  The search proceeds level by level: since the candidates at
each level extend identical prefixes, only the orderings achieving the
minimal next column survive, and twin vertices (equal rows up to the
mutual bits) are interchangeable and explored once.
"""

from __future__ import annotations

from .graph import Graph, bits

CANON_BUDGET = 16


class CanonBudgetExceeded(ValueError):
    """Canonical forms are only computed for small graphs."""


def _twin_masks(rows, n):
    """twins[v] = bitset of u such that swapping u and v is an automorphism."""
    twins = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            mask = ~((1 << u) | (1 << v))
            if (rows[u] & mask) == (rows[v] & mask):
                twins[u] |= 1 << v
                twins[v] |= 1 << u
    return twins


def canonical_order(g: Graph):
    """One vertex ordering realizing the canonical form."""
    _, order = _canonical(g)
    return order


def canonical_form(g: Graph) -> bytes:
    """n byte(s) followed by the minimal packed upper-triangle bitstring."""
    cols, _ = _canonical(g)
    nbits = g.n * (g.n - 1) // 2
    # concatenate column bitstrings, pad to full bytes
    val = 0
    pos = 0
    for i, col in enumerate(cols):
        val = (val << i) | col
        pos += i
    assert pos == nbits
    pad = (-nbits) % 8
    val <<= pad
    return bytes([g.n]) + val.to_bytes((nbits + pad) // 8, "big")


def canon_bytes_to_graph(form: bytes) -> Graph:
    """Rebuild the canonically labelled graph from its canonical form."""
    n = form[0]
    nbits = n * (n - 1) // 2
    val = int.from_bytes(form[1:], "big") >> ((-nbits) % 8)
    g = Graph(n)
    pos = nbits
    for v in range(n):
        for u in range(v):
            pos -= 1
            if val >> pos & 1:
                g.add_edge(u, v)
    return g


def canonical_graph(g: Graph) -> Graph:
    """g relabelled into its canonical ordering."""
    order = canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * g.n
    for v in range(g.n):
        for w in bits(g.adj[v]):
            rows[pos[v]] |= 1 << pos[w]
    return Graph(g.n, rows)


def _canonical(g: Graph):
    n = g.n
    if n > CANON_BUDGET:
        raise CanonBudgetExceeded(f"n={n} above canon budget {CANON_BUDGET}")
    if n == 0:
        return [], ()
    rows = g.adj
    twins = _twin_masks(rows, n)
    full = (1 << n) - 1
    # frontier: partial orderings sharing an identical column prefix
    frontier = [()]
    cols = []
    for level in range(n):
        best_col = None
        nxt = []
        for order in frontier:
            rem = full
            for v in order:
                rem &= ~(1 << v)
            for cand in bits(rem):
                # a smaller remaining twin explores the same subtree
                if twins[cand] & rem & ((1 << cand) - 1):
                    continue
                col = 0
                rc = rows[cand]
                for j, p in enumerate(order):
                    col |= (rc >> p & 1) << (level - 1 - j)
                if best_col is None or col < best_col:
                    best_col = col
                    nxt = [order + (cand,)]
                elif col == best_col:
                    nxt.append(order + (cand,))
        cols.append(best_col)
        frontier = nxt
    return cols, frontier[0]
