import math

import pytest

from blowup.families import (
    FamilySpec,
    build,
    complete,
    complete_bipartite,
    cycle,
    edge_blowup,
    h_npt,
    h_plus,
    matching,
    path,
    star,
    thm1_extremal,
    thm1_variant_count,
    thm2_extremal,
    thm3_extremal,
    turan_graph,
    turan_part_sizes,
)
from blowup.graph import join
from conftest import brute_triangles


def test_basic_families():
    m = matching(3)
    assert m.n == 6 and set(m.edges()) == {(0, 1), (2, 3), (4, 5)}
    s = star(4)
    assert s.n == 5 and all(s.has_edge(0, i) for i in range(1, 5))
    p = path(3)
    assert p.n == 4 and p.edge_count == 3 and p.degree(0) == 1
    c = cycle(4)
    assert c.n == 4 and c.edge_count == 4 and all(c.degree(v) == 2 for v in range(4))
    k = complete(5)
    assert k.edge_count == 10 and k.triangle_count() == 10
    b = complete_bipartite(2, 3)
    assert b.edge_count == 6 and b.triangle_count() == 0


def test_family_param_validation():
    for bad in (matching, star, path):
        with pytest.raises(ValueError):
            bad(0)
    with pytest.raises(ValueError):
        cycle(2)
    with pytest.raises(ValueError):
        build(FamilySpec("nonsense", (3,)))


def test_build_dispatch():
    assert build(FamilySpec("matching", (2,))).adj == matching(2).adj
    assert FamilySpec("turan", (3, 7)).build().adj == turan_graph(3, 7).adj


def test_turan_graph_shape():
    g = turan_graph(3, 8)
    assert turan_part_sizes(3, 8) == [3, 3, 2]
    assert g.edge_count == (8 * 8 - 3 * 3 - 3 * 3 - 2 * 2) // 2
    assert g.triangle_count() == 3 * 3 * 2
    # parts are independent sets
    assert not g.has_edge(0, 1) and not g.has_edge(6, 7)


def test_edge_blowup_arithmetic():
    for base, p in ((cycle(3), 3), (path(3), 3), (matching(2), 3),
                    (cycle(4), 4), (path(2), 5)):
        e = base.edge_count
        g = edge_blowup(base, p)
        assert g.n == base.n + e * (p - 2)
        # cliques of distinct base edges share at most one vertex, so
        # their edge sets are disjoint
        assert g.edge_count == e * math.comb(p, 2)
        # original vertices keep their labels and adjacency
        for u, v in base.edges():
            assert g.has_edge(u, v)
    with pytest.raises(ValueError):
        edge_blowup(cycle(3), 2)


def test_c33_p33_m23_shapes():
    c33 = edge_blowup(cycle(3), 3)
    assert c33.n == 6 and c33.edge_count == 9 and c33.triangle_count() == 4
    p33 = edge_blowup(path(3), 3)
    assert p33.n == 7 and p33.edge_count == 9 and p33.triangle_count() == 3
    m23 = edge_blowup(matching(2), 3)
    assert m23.n == 6 and m23.edge_count == 6 and m23.triangle_count() == 2


def test_thm1_variant_counts_and_orders():
    assert [thm1_variant_count(n) for n in (8, 9, 10, 11)] == [1, 2, 3, 2]
    for n in range(6, 40):
        for v in range(thm1_variant_count(n)):
            assert thm1_extremal(n, v).n == n
        with pytest.raises(ValueError):
            thm1_extremal(n, thm1_variant_count(n))
    with pytest.raises(ValueError):
        thm1_extremal(5)


def test_thm2_shape():
    g = thm2_extremal(8)
    # join of two 2-edge matchings: t = e_A*|B| + e_B*|A| = 2*4 + 2*4
    assert g.n == 8 and g.triangle_count() == 16
    assert thm2_extremal(24).triangle_count() == 144
    assert thm2_extremal(22).triangle_count() == 120
    with pytest.raises(ValueError):
        thm2_extremal(9)
    with pytest.raises(ValueError):
        thm2_extremal(6)


def test_thm3_shape():
    for n in (3, 4, 9, 10, 15):
        g = thm3_extremal(n)
        assert g.n == n
        assert g.triangle_count() == (n - 1) ** 2 // 4
        assert len(brute_triangles(g)) == (n - 1) ** 2 // 4


def test_h_npt_and_h_plus():
    g = h_npt(10, 2, 2)
    assert g.n == 10
    # K1 + T2(9): apex triangles over the 4*5 cross edges
    assert g.triangle_count() == 4 * 5
    hp = h_plus(10, 2, 2)
    assert hp.edge_count == g.edge_count + 1
    # oracle count: apex-cross 20, apex+extra edge 1, extra edge vs far side 4
    assert len(brute_triangles(hp)) == 25
    assert hp.triangle_count() == 25
    with pytest.raises(ValueError):
        h_npt(3, 2, 5)


def test_matching_join_identity(rng):
    # t(M_a + M_b) = a*2b + b*2a = 4ab
    for a, b in ((1, 1), (2, 3), (4, 2)):
        g = join(matching(a), matching(b))
        assert g.triangle_count() == 4 * a * b
