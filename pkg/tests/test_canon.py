import itertools

import pytest

from blowup.canon import (
    CANON_BUDGET,
    CanonBudgetExceeded,
    canon_bytes_to_graph,
    canonical_form,
    canonical_graph,
    canonical_order,
)
from blowup.graph import Graph, empty_graph
from conftest import random_graph, relabel


def brute_minimum_form(g: Graph) -> bytes:
    """Oracle: minimum over all n! orderings (n <= 6)."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        h = relabel(g, {v: i for i, v in enumerate(perm)})
        bits = []
        for v in range(h.n):
            for u in range(v):
                bits.append(h.adj[v] >> u & 1)
        key = tuple(bits)
        if best is None or key < best:
            best = key
    nbits = g.n * (g.n - 1) // 2
    val = 0
    for b in best or ():
        val = val << 1 | b
    pad = (-nbits) % 8
    return bytes([g.n]) + (val << pad).to_bytes((nbits + pad) // 8, "big")


def test_against_permutation_oracle(rng):
    for _ in range(80):
        n = rng.randrange(0, 6)
        g = random_graph(rng, n, rng.choice((0.3, 0.5, 0.8)))
        assert canonical_form(g) == brute_minimum_form(g)


def test_shuffle_invariance(rng):
    for _ in range(150):
        n = rng.randrange(1, 10)
        g = random_graph(rng, n, 0.5)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(relabel(g, perm))


def test_distinguishes_nonisomorphic():
    a = Graph(4)
    a.add_edge(0, 1)
    a.add_edge(2, 3)
    b = Graph(4)
    b.add_edge(0, 1)
    b.add_edge(1, 2)
    assert canonical_form(a) != canonical_form(b)


def test_class_count_on_four_vertices():
    # there are 11 isomorphism classes of graphs on 4 vertices
    forms = set()
    for mask in range(1 << 6):
        g = Graph(4)
        pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                g.add_edge(u, v)
        forms.add(canonical_form(g))
    assert len(forms) == 11


def test_canonical_graph_is_fixed_point(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randrange(1, 9), 0.5)
        cg = canonical_graph(g)
        assert canonical_form(cg) == canonical_form(g)
        assert canonical_graph(cg).adj == cg.adj
        order = canonical_order(g)
        assert sorted(order) == list(range(g.n))


def test_form_round_trip(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randrange(0, 9), 0.5)
        back = canon_bytes_to_graph(canonical_form(g))
        assert back.adj == canonical_graph(g).adj


def test_budget():
    with pytest.raises(CanonBudgetExceeded):
        canonical_form(empty_graph(CANON_BUDGET + 1))
