import pytest

from blowup.formulas import (
    EXACT,
    LOWER,
    THEOREM3_THRESHOLD,
    UPPER,
    BelowThreshold,
    BoundValue,
    ex_c33_edges,
    ex_c33_triangles_bound,
    ex_m23_triangles,
    ex_p33_triangles,
    FORMULAS,
)


def test_ex_c33_edges_piecewise():
    # residues 0,1,3 share one expression; residue 2 loses one edge
    assert ex_c33_edges(8).value == 16 + 4
    assert ex_c33_edges(9).value == 20 + 4
    assert ex_c33_edges(10).value == 25 + 5 - 1
    assert ex_c33_edges(11).value == 30 + 5
    for n in range(6, 120):
        bv = ex_c33_edges(n)
        expect = n * n // 4 + n // 2 - (1 if n % 4 == 2 else 0)
        assert bv.value == expect and bv.kind == EXACT and bv.valid_from == 6
    with pytest.raises(BelowThreshold):
        ex_c33_edges(5)


def test_ex_c33_triangles_even_exact():
    assert ex_c33_triangles_bound(24).value == 144
    assert ex_c33_triangles_bound(22).value == 120
    for n in range(22, 100, 2):
        bv = ex_c33_triangles_bound(n)
        assert bv.value == n * n // 4 - 1 + (1 if n % 4 == 0 else 0)
        assert bv.kind == EXACT and not bv.odd_case


def test_ex_c33_triangles_odd_is_floored_upper():
    for n in range(23, 99, 2):
        bv = ex_c33_triangles_bound(n)
        assert bv.value == (n * n - 4) // 4
        assert bv.kind == UPPER and bv.odd_case
    with pytest.raises(BelowThreshold):
        ex_c33_triangles_bound(21)


def test_ex_p33_threshold_metadata():
    bv = ex_p33_triangles(9)
    assert bv.value == 16 and bv.kind == LOWER
    assert bv.valid_from == THEOREM3_THRESHOLD == 300 ** 3
    assert ex_p33_triangles(THEOREM3_THRESHOLD).kind == EXACT
    for n in range(3, 200):
        assert ex_p33_triangles(n).value == (n - 1) ** 2 // 4
    with pytest.raises(BelowThreshold):
        ex_p33_triangles(2)


def test_ex_m23_crossover():
    # 3n-8 wins up to the crossover, the quadratic after
    assert ex_m23_triangles(7).value == 13
    assert ex_m23_triangles(8).value == 16
    for n in range(7, 60):
        assert ex_m23_triangles(n).value == max(3 * n - 8, (n - 1) ** 2 // 4)
    assert ex_m23_triangles(100).value == 99 * 99 // 4
    with pytest.raises(BelowThreshold):
        ex_m23_triangles(6)


def test_bound_value_validation():
    with pytest.raises(ValueError):
        BoundValue(-1, EXACT, 1, "x")


def test_formula_registry():
    assert set(FORMULAS) == {
        "ex_c33_edges", "ex_c33_triangles", "ex_p33", "ex_m23"
    }
    assert FORMULAS["ex_p33"](9).value == 16
