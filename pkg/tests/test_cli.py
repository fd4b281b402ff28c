import json

import pytest

from blowup import graph6
from blowup.cli import main
from blowup.families import complete, cycle, edge_blowup, path, thm2_extremal


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_construct(capsys):
    code, out = run(capsys, "construct", "thm2", "24")
    assert code == 0
    g6, rest = out.split(None, 1)
    assert graph6.decode(g6).triangle_count() == 144
    assert "t=144" in rest


def test_construct_blowup(capsys):
    code, out = run(capsys, "construct", "cycle", "3", "--blowup", "3")
    assert code == 0
    assert out.split()[0] == graph6.encode(edge_blowup(cycle(3), 3))


def test_check_contains(capsys):
    k6 = graph6.encode(complete(6))
    code, out = run(capsys, "check", k6, "C33")
    assert code == 0 and "contains C33" in out


def test_check_absent(capsys):
    g6s = graph6.encode(thm2_extremal(12))
    code, out = run(capsys, "check", g6s, "C33")
    assert code == 0 and "absent" in out


def test_count(capsys):
    code, out = run(capsys, "count", graph6.encode(complete(4)), "--pairs")
    assert code == 0
    assert "t(G) = 4" in out and "t(0,1) = 4" in out


def test_formula(capsys):
    code, out = run(capsys, "formula", "ex_p33", "9")
    assert code == 0 and "= 16" in out and "lower" in out
    code, out = run(capsys, "formula", "ex_c33_triangles", "23")
    assert code == 0 and "upper" in out and "odd n" in out


def test_ex_exact(capsys):
    code, out = run(capsys, "ex-exact", "7", "M23")
    assert code == 0 and "= 13" in out


def test_ex_search(capsys):
    code, out = run(capsys, "ex-search", "12", "C33",
                    "--restarts", "3", "--iters", "5", "--seed", "1")
    assert code == 0 and "best found t" in out


def test_verify_theorem(capsys):
    code, out = run(capsys, "verify-theorem", "2", "--n-range", "22..40")
    assert code == 0 and "consistent" in out
    code, out = run(capsys, "verify-theorem", "1", "--n-range", "6..30")
    assert code == 0


def test_verify_claims(capsys):
    g6s = graph6.encode(thm2_extremal(12))
    code, out = run(capsys, "verify-claims", g6s)
    assert code == 0
    assert out.count("holds") == 4


def test_verify_claims_uncleaned_needs_flag(capsys):
    # a triangle-free edge is rejected without --clean
    p = graph6.encode(path(4))
    code, _ = run(capsys, "verify-claims", p)
    assert code == 2
    code, out = run(capsys, "verify-claims", p, "--clean")
    assert code == 0


def test_reduce(capsys):
    code, out = run(capsys, "reduce", graph6.encode(complete(5)))
    assert code == 0 and "terminal order 5" in out


def test_explore_conjecture_vacuous(capsys):
    code, out = run(capsys, "explore-conjecture", "4", "7", "--restarts", "2")
    assert code == 0 and "vacuous" in out


def test_usage_errors(capsys):
    assert main(["bogus"]) == 2
    assert main([]) == 2
    assert main(["check", "@@@@not-graph6", "C33"]) == 2
    assert main(["formula", "nonsense", "9"]) == 2


def test_ledger_written(tmp_path, capsys):
    path = tmp_path / "ledger.jsonl"
    code, _ = run(capsys, "--ledger", str(path), "formula", "ex_m23", "9")
    assert code == 0
    code, _ = run(capsys, "--ledger", str(path), "ex-exact", "5", "C33")
    assert code == 0
    lines = path.read_text().strip().splitlines()
    assert len(lines) == 2
    rec = json.loads(lines[0])
    assert rec["command"] == "formula"
    assert rec["outcome"]["value"] == 19
    assert rec["version"]
    rec = json.loads(lines[1])
    assert rec["command"] == "ex-exact"
    assert rec["outcome"]["best_value"] == 10


def test_ledger_env_var(tmp_path, capsys, monkeypatch):
    path = tmp_path / "env_ledger.jsonl"
    monkeypatch.setenv("BLOWUP_LEDGER", str(path))
    code, _ = run(capsys, "count", graph6.encode(complete(3)))
    assert code == 0
    assert json.loads(path.read_text())["command"] == "count"
