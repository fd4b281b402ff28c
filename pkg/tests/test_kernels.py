import os
import subprocess
import sys

import pytest

from blowup import _kernels, _pykernels
from conftest import brute_triangles, random_graph

compiled = pytest.importorskip("blowup._ckernels")

KERNELS = (
    "triangle_total",
    "triangle_per_vertex",
    "c33_witness",
    "p33_witness",
)


def test_backends_agree_on_random_graphs(rng):
    for _ in range(600):
        n = rng.randrange(0, 14)
        g = random_graph(rng, n, rng.choice((0.2, 0.5, 0.8)))
        for name in KERNELS:
            a = getattr(compiled, name)(g.adj, n)
            b = getattr(_pykernels, name)(g.adj, n)
            if name == "triangle_per_vertex":
                assert list(a) == list(b)
            else:
                assert a == b


def test_touching_kernels_agree(rng):
    for _ in range(150):
        n = rng.randrange(3, 12)
        g = random_graph(rng, n, 0.5)
        for u in range(n):
            for v in range(u + 1, n):
                if g.has_edge(u, v):
                    continue
                g.add_edge(u, v)
                for name in ("c33_witness_touching", "p33_witness_touching"):
                    a = getattr(compiled, name)(g.adj, n, u, v)
                    b = getattr(_pykernels, name)(g.adj, n, u, v)
                    assert a == b
                g.remove_edge(u, v)


def test_pure_kernels_against_brute_force(rng):
    for _ in range(200):
        n = rng.randrange(0, 10)
        g = random_graph(rng, n, 0.5)
        tris = brute_triangles(g)
        assert _pykernels.triangle_total(g.adj, n) == len(tris)
        per = [sum(1 for t in tris if v in t) for v in range(n)]
        assert list(_pykernels.triangle_per_vertex(g.adj, n)) == per


def test_compiled_rejects_oversized_rows():
    n = 520
    rows = [0] * n
    with pytest.raises(ValueError):
        compiled.triangle_total(rows, n)


def test_dispatcher_uses_compiled_by_default():
    assert _kernels.BACKEND in ("c", "python")
    if _kernels.BACKEND == "c":
        assert _kernels.triangle_total is not _pykernels.triangle_total


def test_env_override_forces_pure_backend():
    code = (
        "from blowup import _kernels; "
        "assert _kernels.BACKEND == 'python', _kernels.BACKEND"
    )
    env = dict(os.environ, BLOWUP_PURE="1")
    subprocess.run([sys.executable, "-c", code], check=True, env=env)
