import math

import pytest

from blowup.canon import canonical_form, canonical_graph
from blowup import graph6
from blowup.detect import as_pattern, contains
from blowup.families import complete, thm2_extremal, thm3_extremal
from blowup.graph import empty_graph, join
from blowup.search import (
    BudgetExceeded,
    SearchParams,
    default_seed_graphs,
    exact_generalized_turan,
    explore_conjecture,
    free_classes,
    is_edge_maximal_free,
    local_search,
    naive_free_class_keys,
)


def test_free_classes_match_naive_oracle():
    for kind in ("C33", "P33", "M23", "K5", "K5minus"):
        for n in range(5):
            ours = {canonical_form(g) for g in free_classes(n, kind)}
            assert ours == naive_free_class_keys(n, kind), (kind, n)


def test_free_classes_all_free_and_distinct():
    seen = set()
    for g in free_classes(5, "K5"):
        assert contains(g, "K5") is None
        key = canonical_form(g)
        assert key not in seen
        seen.add(key)
    # K5-free classes on 5 vertices = all classes (34) minus K5 itself
    assert len(seen) == 33


def test_exact_small_values():
    # ex(5, K3, C33): nothing on 5 vertices can host a 6-vertex pattern
    out = exact_generalized_turan(5, "C33")
    assert out.best_value == math.comb(5, 3) == 10
    assert out.mode == "exact"
    assert out.witnesses == (graph6.encode(canonical_graph(complete(5))),)


def test_exact_vacuous_pattern():
    out = exact_generalized_turan(6, "P33")  # pattern has 7 vertices
    assert out.best_value == 20
    assert out.witnesses == (graph6.encode(canonical_graph(complete(6))),)


def test_exact_m23_seven():
    out = exact_generalized_turan(7, "M23")
    assert out.best_value == 13
    book = join(complete(3), empty_graph(4))
    assert graph6.encode(canonical_graph(book)) in out.witnesses
    for w in out.witnesses:
        assert contains(graph6.decode(w), "M23") is None


def test_exact_witnesses_are_edge_maximal():
    for kind, n in (("C33", 7), ("M23", 7)):
        out = exact_generalized_turan(n, kind)
        for w in out.witnesses:
            g = graph6.decode(w)
            assert g.triangle_count() == out.best_value
            assert is_edge_maximal_free(g, kind)


def test_exact_budget():
    with pytest.raises(BudgetExceeded):
        exact_generalized_turan(11, "C33")
    # explicit override allows it (not executed: would be slow)
    out = exact_generalized_turan(4, "C33", budget=4)
    assert out.best_value == 4


def test_exact_parallel_matches_serial():
    a = exact_generalized_turan(7, "C33", workers=1)
    b = exact_generalized_turan(7, "C33", workers=2)
    assert a.best_value == b.best_value
    assert a.witnesses == b.witnesses
    assert a.nodes_explored == b.nodes_explored


def test_local_search_deterministic_and_worker_invariant():
    p1 = SearchParams(seed=5, restarts=6, perturb_rounds=8, workers=1)
    p2 = SearchParams(seed=5, restarts=6, perturb_rounds=8, workers=2)
    a = local_search(12, "C33", p1)
    b = local_search(12, "C33", p1)
    c = local_search(12, "C33", p2)
    assert a.best_value == b.best_value == c.best_value
    assert a.witnesses == b.witnesses == c.witnesses


def test_local_search_never_loses_to_seed():
    params = SearchParams(seed=0, restarts=3, perturb_rounds=5)
    out = local_search(24, "C33", params)
    assert out.best_value >= thm2_extremal(24).triangle_count() == 144
    out = local_search(51, "P33", params)
    assert out.best_value >= thm3_extremal(51).triangle_count() == 625
    # the best witness is itself pattern-free
    g = graph6.decode(out.witnesses[0])
    assert contains(g, "P33") is None


def test_local_search_triangle_free_pattern():
    out = local_search(8, complete(3), SearchParams(seed=1, restarts=2,
                                                    perturb_rounds=4))
    assert out.best_value == 0


def test_default_seeds_are_pattern_free():
    for kind in ("C33", "P33", "M23"):
        for n in (9, 10, 16, 21):
            for g in default_seed_graphs(n, as_pattern(kind)):
                assert g.n == n
                assert contains(g, kind) is None


def test_explore_conjecture_vacuous():
    rep = explore_conjecture(4, 7, SearchParams(restarts=2, perturb_rounds=3))
    # C4^3 has 8 vertices, P4^3 has 9: both vacuous on 7 vertices
    assert all(e.vacuous for e in rep.entries)
    assert all(e.search_best == math.comb(7, 3) for e in rep.entries)


def test_explore_conjecture_reports_relations():
    rep = explore_conjecture(
        4, 12, SearchParams(seed=2, restarts=4, perturb_rounds=6)
    )
    assert rep.k == 4 and rep.n == 12
    for e in rep.entries:
        assert not e.vacuous
        assert e.relation in ("agree", "exceeds", "shortfall")
        assert e.search_best >= 0
    with pytest.raises(ValueError):
        explore_conjecture(3, 10)
