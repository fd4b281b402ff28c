import random

import pytest

from blowup.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def relabel(g: Graph, perm) -> Graph:
    out = Graph(g.n)
    for u, v in g.edges():
        out.add_edge(perm[u], perm[v])
    return out


def brute_triangles(g: Graph):
    """Independent O(n^3) triangle scan used as an oracle."""
    tris = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not g.has_edge(a, b):
                continue
            for c in range(b + 1, g.n):
                if g.has_edge(a, c) and g.has_edge(b, c):
                    tris.append((a, b, c))
    return tris


@pytest.fixture
def rng():
    return random.Random(20240817)
