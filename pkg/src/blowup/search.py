"""Exact generalized Turan values at small n, heuristic witnesses above.

Exact mode enumerates pattern-free graphs up to isomorphism by canonical
augmentation (grow by one vertex, dedupe by canonical form, prune
branches containing the pattern) and maximizes the triangle count over
the last level.  The maximum over all pattern-free n-vertex graphs is
attained at an edge-maximal one because the triangle count is monotone
under edge addition, and every n-vertex pattern-free graph arises as a
one-vertex extension of a pattern-free class on n-1 vertices
(containment is hereditary), so scanning all extensions is exhaustive.

Heuristic mode is a seeded multi-restart hill climb over edge
insertions, with remove-and-resaturate perturbations and a tabu list of
cheap isomorphism-invariant fingerprints.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from multiprocessing import get_context

from .canon import canon_bytes_to_graph, canonical_form, canonical_graph
from .detect import Pattern, as_pattern, contains, creates_pattern, pattern_graph
from .families import complete, matching, thm2_extremal, thm3_extremal
from .graph import Graph, bits, disjoint_union, empty_graph, join
from . import graph6

EXACT_BUDGET_DEFAULT = 10


class BudgetExceeded(ValueError):
    """Exact enumeration requested above its configured budget."""


@dataclass(frozen=True)
class SearchOutcome:
    n: int
    pattern: str
    best_value: int
    witnesses: tuple          # graph6 strings
    mode: str                 # "exact" | "heuristic"
    nodes_explored: int
    wall_time: float
    seed: int | None = None


@dataclass(frozen=True)
class SearchParams:
    seed: int = 0
    restarts: int = 20
    perturb_rounds: int = 40
    perturb_removals: int = 2
    workers: int = 1


def _pattern_key(p: Pattern):
    if p.kind == "explicit":
        return ("explicit", p.graph.n, tuple(p.graph.adj))
    return p.kind


def _pattern_label(p: Pattern) -> str:
    if p.kind == "explicit":
        return f"explicit:{graph6.encode(p.graph)}"
    return p.kind


# -- isomorph-free enumeration ------------------------------------------------

_CLASS_CACHE: dict = {}


def free_classes(n: int, pattern) -> list:
    """Representatives of all pattern-free isomorphism classes on n vertices."""
    classes, _ = _free_level(n, as_pattern(pattern))
    return classes


def _free_level(n: int, p: Pattern):
    key = (n, _pattern_key(p))
    hit = _CLASS_CACHE.get(key)
    if hit is not None:
        return hit
    if n == 0:
        result = ([Graph(0)], 0)
    else:
        parents, nodes = _free_level(n - 1, p)
        m = n - 1
        seen = {}
        for parent in parents:
            for subset in range(1 << m):
                rows = list(parent.adj) + [subset]
                for i in bits(subset):
                    rows[i] |= 1 << m
                g = Graph(n, rows)
                nodes += 1
                if contains(g, p) is not None:
                    continue
                key2 = canonical_form(g)
                if key2 not in seen:
                    seen[key2] = g
        result = ([seen[k] for k in sorted(seen)], nodes)
    _CLASS_CACHE[key] = result
    return result


def naive_free_class_keys(n: int, pattern) -> set:
    """Oracle: canonical keys of pattern-free classes via the full 2^C(n,2)
    labeled-graph scan.  Only sensible for n <= 6."""
    p = as_pattern(pattern)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keys = set()
    for mask in range(1 << len(pairs)):
        g = Graph(n)
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                g.add_edge(u, v)
        if contains(g, p) is None:
            keys.add(canonical_form(g))
    return keys


# -- exact search -------------------------------------------------------------


def _subset_triangle_delta(rows, subset) -> int:
    # triangles created by joining a new vertex to `subset`
    s = 0
    for i in bits(subset):
        s += (rows[i] & subset).bit_count()
    return s // 2


def _rebuild_pattern(kind, payload) -> Pattern:
    if kind == "explicit":
        return Pattern("explicit", Graph(payload[0], payload[1]))
    return Pattern(kind)


def _expand_parent(args):
    """Sweep 1: best triangle count over free one-vertex extensions.

    No canonical forms here; optimal children are re-collected in a
    second sweep once the global maximum is known, so ties at low t cost
    nothing.
    """
    rows, n, kind, pat_payload = args
    p = _rebuild_pattern(kind, pat_payload)
    m = n - 1
    rows = list(rows)
    base_t = Graph(m, rows).triangle_count() if m else 0
    best = -1
    nodes = 0
    for subset in range(1 << m):
        nodes += 1
        t = base_t + _subset_triangle_delta(rows, subset)
        if t <= best:
            continue  # cannot improve, freeness irrelevant
        child = rows + [subset]
        for i in bits(subset):
            child[i] |= 1 << m
        if contains(Graph(n, child), p) is None:
            best = t
    return best, nodes


def _collect_parent(args):
    """Sweep 2: canonical forms of free extensions hitting the target t."""
    rows, n, kind, pat_payload, target = args
    p = _rebuild_pattern(kind, pat_payload)
    m = n - 1
    rows = list(rows)
    base_t = Graph(m, rows).triangle_count() if m else 0
    keys = set()
    for subset in range(1 << m):
        if base_t + _subset_triangle_delta(rows, subset) != target:
            continue
        child = rows + [subset]
        for i in bits(subset):
            child[i] |= 1 << m
        g = Graph(n, child)
        if contains(g, p) is None:
            keys.add(canonical_form(g))
    return keys


def exact_generalized_turan(
    n: int, pattern, workers: int = 1, budget: int = EXACT_BUDGET_DEFAULT
) -> SearchOutcome:
    """ex(n, K_3, pattern) with all optimal graphs, by exhaustive search."""
    if n > budget:
        raise BudgetExceeded(f"exact search for n={n} above budget {budget}")
    p = as_pattern(pattern)
    start = time.perf_counter()
    pg = pattern_graph(p)
    if pg.n > n:
        # vacuous: the complete graph wins
        kn = complete(n)
        return SearchOutcome(
            n, _pattern_label(p), math.comb(n, 3),
            (graph6.encode(canonical_graph(kn)),), "exact", 1,
            time.perf_counter() - start,
        )
    parents, nodes = _free_level(n - 1, p)
    payload = (pg.n, tuple(pg.adj)) if p.kind == "explicit" else None
    tasks = [(tuple(g.adj), n, p.kind, payload) for g in parents]
    if workers > 1:
        with get_context("fork").Pool(workers) as pool:
            results = pool.map(_expand_parent, tasks, chunksize=8)
    else:
        results = [_expand_parent(t) for t in tasks]
    best = max(b for b, _ in results)
    nodes += sum(nd for _, nd in results)
    collect = [
        (tuple(g.adj), n, p.kind, payload, best)
        for g, (b, _) in zip(parents, results)
        if b == best
    ]
    if workers > 1:
        with get_context("fork").Pool(workers) as pool:
            key_sets = pool.map(_collect_parent, collect, chunksize=8)
    else:
        key_sets = [_collect_parent(t) for t in collect]
    keys = set().union(*key_sets)
    witnesses = tuple(
        sorted(graph6.encode(canon_bytes_to_graph(k)) for k in keys)
    )
    return SearchOutcome(
        n, _pattern_label(p), best, witnesses, "exact", nodes,
        time.perf_counter() - start,
    )


def is_edge_maximal_free(g: Graph, pattern) -> bool:
    """No edge can be added without creating the pattern."""
    p = as_pattern(pattern)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and not creates_pattern(g, p, u, v):
                return False
    return True


# -- heuristic search ---------------------------------------------------------


def _fingerprint(g: Graph):
    st = g.stats()
    return hash(
        (
            tuple(sorted(g.adj[v].bit_count() for v in range(g.n))),
            tuple(sorted(st.per_vertex)),
            g.edge_count,
            st.total,
        )
    )


def _saturate(g: Graph, p: Pattern, rng) -> int:
    """Add edges in random order while staying pattern-free.

    One pass suffices: containment is monotone under edge addition, so a
    rejected pair can never become addable later.  Returns the number of
    candidate insertions examined.
    """
    cand = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    rng.shuffle(cand)
    for u, v in cand:
        if not creates_pattern(g, p, u, v):
            g.add_edge(u, v)
    return len(cand)


def _restart(n, p, seed_rows, base_seed, r, params):
    # distinct deterministic stream per restart
    rng = random.Random(base_seed * 1_000_003 + r)
    g = Graph(n, seed_rows) if seed_rows is not None else Graph(n)
    nodes = _saturate(g, p, rng)
    best_t = g.triangle_count()
    best_rows = list(g.adj)
    tabu = {_fingerprint(g)}
    for _ in range(params.perturb_rounds):
        edges = list(g.edges())
        if not edges:
            break
        for _ in range(min(params.perturb_removals, len(edges))):
            u, v = edges.pop(rng.randrange(len(edges)))
            g.remove_edge(u, v)
        nodes += _saturate(g, p, rng)
        t = g.triangle_count()
        fp = _fingerprint(g)
        if t > best_t and fp not in tabu:
            best_t = t
            best_rows = list(g.adj)
        elif t < best_t or fp in tabu:
            g = Graph(n, best_rows)
        tabu.add(fp)
    return best_t, best_rows, nodes


def _restart_task(args):
    n, kind, payload, seed_rows, base_seed, r, params = args
    p = Pattern(kind) if kind != "explicit" else Pattern(
        "explicit", Graph(payload[0], payload[1])
    )
    return _restart(n, p, seed_rows, base_seed, r, params)


def default_seed_graphs(n: int, p: Pattern) -> list:
    """Pattern-free construction seeds for the hill climb."""
    out = []
    if p.kind == "C33":
        if n >= 8 and n % 2 == 0:
            out.append(thm2_extremal(n))
        if n >= 9 and n % 2 == 1:
            # odd-n analogue: near-balanced matchings plus one isolated vertex
            a = (n - 1) // 4
            out.append(
                join(disjoint_union(matching(a), empty_graph(1)),
                     matching((n - 1 - 2 * a) // 2))
            )
        if n >= 3:
            out.append(thm3_extremal(n))
    elif p.kind == "P33":
        if n >= 3:
            out.append(thm3_extremal(n))
    elif p.kind == "M23":
        if n >= 4:
            out.append(join(complete(3), empty_graph(n - 3)))
        if n >= 3:
            out.append(thm3_extremal(n))
    return [g for g in out if contains(g, p) is None]


def local_search(n: int, pattern, params: SearchParams | None = None,
                 seeds=None) -> SearchOutcome:
    """Seeded multi-restart hill climb maximizing t(G) under freeness."""
    params = params or SearchParams()
    p = as_pattern(pattern)
    start = time.perf_counter()
    seed_graphs = list(seeds) if seeds is not None else default_seed_graphs(n, p)
    seed_graphs = [g for g in seed_graphs if contains(g, p) is None]
    payload = None
    if p.kind == "explicit":
        payload = (p.graph.n, tuple(p.graph.adj))
    tasks = []
    for r in range(params.restarts):
        seed_rows = (
            tuple(seed_graphs[r].adj) if r < len(seed_graphs) else None
        )
        tasks.append((n, p.kind, payload, seed_rows, params.seed, r, params))
    if params.workers > 1:
        with get_context("fork").Pool(params.workers) as pool:
            results = pool.map(_restart_task, tasks, chunksize=1)
    else:
        results = [_restart_task(t) for t in tasks]
    # seeds themselves are floors even if restarts < len(seed_graphs)
    for g in seed_graphs:
        results.append((g.triangle_count(), list(g.adj), 0))
    best_t = -1
    best_g6 = None
    nodes = 0
    for t, rows, nd in results:
        nodes += nd
        g6 = graph6.encode(Graph(n, rows))
        if t > best_t or (t == best_t and (best_g6 is None or g6 < best_g6)):
            best_t = t
            best_g6 = g6
    return SearchOutcome(
        n, _pattern_label(p), best_t, (best_g6,), "heuristic", nodes,
        time.perf_counter() - start, seed=params.seed,
    )


# -- conjecture exploration ----------------------------------------------------


@dataclass(frozen=True)
class ConjectureEntry:
    pattern: str
    vacuous: bool
    conjectured_value: int | None
    conjectured_free: bool | None
    search_best: int
    relation: str            # vacuous | agree | exceeds | shortfall


@dataclass(frozen=True)
class ConjectureReport:
    k: int
    n: int
    entries: tuple


def explore_conjecture(k: int, n: int,
                       params: SearchParams | None = None) -> ConjectureReport:
    """Compare the conjectured extremal graphs for C_k^3 / P_k^3 with search."""
    if k < 4:
        raise ValueError("conjecture exploration needs k >= 4")
    from .families import cycle, edge_blowup, h_npt, h_plus, path

    params = params or SearchParams(restarts=8, perturb_rounds=15)
    t_param = (k - 1) // 2 + 1
    entries = []
    for label, base in ((f"C{k}^3", cycle(k)), (f"P{k}^3", path(k))):
        pg = edge_blowup(base, 3)
        if pg.n > n:
            best = math.comb(n, 3)
            entries.append(
                ConjectureEntry(label, True, None, None, best, "vacuous")
            )
            continue
        conj = h_npt(n, 2, t_param) if k % 2 else h_plus(n, 2, t_param)
        p = Pattern.explicit(pg)
        free = contains(conj, p) is None
        seeds = [conj] if free else []
        outcome = local_search(n, p, params, seeds=seeds)
        conj_t = conj.triangle_count()
        if outcome.best_value > conj_t:
            relation = "exceeds"
        elif outcome.best_value < conj_t:
            relation = "shortfall"
        else:
            relation = "agree"
        entries.append(
            ConjectureEntry(label, False, conj_t, free,
                            outcome.best_value, relation)
        )
    return ConjectureReport(k, n, tuple(entries))
