"""Executable proof apparatus: edge weights, four claims, vertex reduction.

All weights use exact rational arithmetic; thresholds such as
1 + 1/(n-2) versus 7/6 differ by tiny margins, and floating point would
produce spurious verdicts.  Checks report raw verdicts with
applicability flags: a failure on an arbitrary graph is a finding about
that graph, not a contradiction (claims 3 and 4 only need to hold on
triangle-maximal inputs).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .detect import contains_c33, contains_k5_minus
from .graph import Graph, bits, delete_vertices

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not_applicable"


class UncleanedGraph(ValueError):
    """Weight analysis requires every edge to lie in a triangle."""


@dataclass(frozen=True)
class ClaimVerdict:
    claim: str
    status: str
    witness: tuple | None = None
    reason: str | None = None
    detail: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


@dataclass(frozen=True)
class WeightProfile:
    """Exact edge/triangle weights with the threshold split of T(G).

    w(uv) = 1/|N(uv)|; w(xyz) = w(xy) + w(xz) + w(yz); T_1 collects the
    triangles of weight >= 1 + 2/n, T_2 the rest.
    """

    n: int
    edge_weights: dict
    triangle_weights: dict
    t1: tuple
    t2: tuple
    threshold: Fraction

    @property
    def total_weight(self) -> Fraction:
        return sum(self.triangle_weights.values(), Fraction(0))


def _require_cleaned(g: Graph) -> None:
    for u, v in g.edges():
        if not g.common_mask(u, v):
            raise UncleanedGraph(f"edge ({u}, {v}) lies in no triangle")


def weight_profile(g: Graph) -> WeightProfile:
    _require_cleaned(g)
    ew = {
        (u, v): Fraction(1, g.common_mask(u, v).bit_count())
        for u, v in g.edges()
    }
    tw = {}
    t1 = []
    t2 = []
    threshold = 1 + Fraction(2, g.n) if g.n else Fraction(1)
    for x, y, z in g.triangles():
        w = ew[(x, y)] + ew[(x, z)] + ew[(y, z)]
        tw[(x, y, z)] = w
        (t1 if w >= threshold else t2).append((x, y, z))
    return WeightProfile(g.n, ew, tw, tuple(t1), tuple(t2), threshold)


def _not_applicable(claim: str, g: Graph):
    emb = contains_c33(g)
    if emb is not None:
        return ClaimVerdict(
            claim, NOT_APPLICABLE, reason="input contains C33",
            detail={"embedding": emb.mapping},
        )
    return None


def check_claim1(g: Graph) -> ClaimVerdict:
    """Every triangle weighs at least 1 + 1/(n-2) (and at most 3), or all
    its edges weigh 1/3 and it extends to an induced K_5 or K_5 minus an
    edge."""
    na = _not_applicable("claim1", g)
    if na:
        return na
    prof = weight_profile(g)
    n = g.n
    lo = 1 + Fraction(1, n - 2) if n > 2 else Fraction(3)
    third = Fraction(1, 3)
    for tri, w in prof.triangle_weights.items():
        if lo <= w <= 3:
            continue
        x, y, z = tri
        if (
            prof.edge_weights[(x, y)] == third
            and prof.edge_weights[(x, z)] == third
            and prof.edge_weights[(y, z)] == third
            and _extends_to_dense_five(g, x, y, z)
        ):
            continue
        return ClaimVerdict("claim1", FAILS, witness=tri,
                            detail={"weight": str(w)})
    return ClaimVerdict("claim1", HOLDS)


def _extends_to_dense_five(g: Graph, x: int, y: int, z: int) -> bool:
    """Some pair u, v makes {x, y, z, u, v} induce K_5 or K_5 minus an edge."""
    tri_mask = (1 << x) | (1 << y) | (1 << z)
    pool = (
        (g.common_mask(x, y) | g.common_mask(x, z) | g.common_mask(y, z))
        & ~tri_mask
    )
    cand = list(bits(pool))
    for i, u in enumerate(cand):
        for v in cand[i + 1:]:
            five = (x, y, z, u, v)
            inside = sum(
                1
                for ii in range(5)
                for jj in range(ii + 1, 5)
                if g.has_edge(five[ii], five[jj])
            )
            if inside >= 9:
                return True
    return False


def check_claim2(g: Graph) -> ClaimVerdict:
    """t(G) <= e(G), via the exact identity sum of w(xyz) = e(G)."""
    na = _not_applicable("claim2", g)
    if na:
        return na
    prof = weight_profile(g)
    t = len(prof.triangle_weights)
    e = g.edge_count
    total = prof.total_weight
    if total != e:
        return ClaimVerdict(
            "claim2", FAILS, reason="weight identity broken",
            detail={"total_weight": str(total), "edges": e},
        )
    if t > e:
        return ClaimVerdict("claim2", FAILS,
                            detail={"triangles": t, "edges": e})
    return ClaimVerdict("claim2", HOLDS,
                        detail={"triangles": t, "edges": e})


def check_claim3(g: Graph) -> ClaimVerdict:
    """No five vertices span nine or more edges."""
    na = _not_applicable("claim3", g)
    if na:
        return na
    _require_cleaned(g)
    emb = contains_k5_minus(g)
    if emb is not None:
        return ClaimVerdict("claim3", FAILS, witness=emb.mapping)
    return ClaimVerdict("claim3", HOLDS)


def check_claim4(g: Graph) -> ClaimVerdict:
    """Average triangle weight >= 1 + 2/n, and the light triangles (T_2)
    pair up inside K_4s whose two companion triangles are heavy."""
    na = _not_applicable("claim4", g)
    if na:
        return na
    prof = weight_profile(g)
    t = len(prof.triangle_weights)
    if t == 0:
        return ClaimVerdict("claim4", HOLDS, reason="no triangles")
    average = prof.total_weight / t
    if average < prof.threshold:
        return ClaimVerdict(
            "claim4", FAILS, reason="average weight below threshold",
            detail={"average": str(average),
                    "threshold": str(prof.threshold)},
        )
    bad = _validate_pairing(g, prof)
    if bad is not None:
        return ClaimVerdict("claim4", FAILS, witness=bad,
                            reason="pairing structure violated",
                            detail={"average": str(average)})
    return ClaimVerdict("claim4", HOLDS, detail={"average": str(average)})


def _pairing_partners(g: Graph, prof: WeightProfile, tri):
    """All (x, x') with x in tri and x' outside realizing the K_4 pairing."""
    half = Fraction(1, 2)
    out = []
    for x in tri:
        y, z = [v for v in tri if v != x]
        if (
            prof.edge_weights[tuple(sorted((x, y)))] != half
            or prof.edge_weights[tuple(sorted((x, z)))] != half
        ):
            continue
        mxy = g.common_mask(x, y) & ~(1 << z)
        mxz = g.common_mask(x, z) & ~(1 << y)
        if mxy != mxz or mxy.bit_count() != 1:
            continue
        xp = mxy.bit_length() - 1
        if not g.has_edge(x, xp):
            continue
        if (
            prof.edge_weights[tuple(sorted((xp, y)))] != half
            or prof.edge_weights[tuple(sorted((xp, z)))] != half
        ):
            continue
        partner = tuple(sorted((xp, y, z)))
        if partner in prof.triangle_weights and partner not in prof.t1:
            out.append((x, xp, partner))
    return out


def _validate_pairing(g: Graph, prof: WeightProfile):
    """None if T_2 pairs cleanly with disjoint heavy companions, else a
    witness triangle."""
    t1 = set(prof.t1)
    partner = {}
    companions = {}
    for tri in prof.t2:
        options = _pairing_partners(g, prof, tri)
        if len(options) != 1:
            return tri
        x, xp, mate = options[0]
        y, z = [v for v in tri if v != x]
        partner[tri] = mate
        companions[tri] = (
            tuple(sorted((x, xp, y))), tuple(sorted((x, xp, z)))
        )
    seen_images = set()
    for tri, mate in partner.items():
        if partner.get(mate) != tri:
            return tri
        if tri > mate:
            continue  # handle each pair once
        c1, c2 = companions[tri]
        if c1 not in t1 or c2 not in t1:
            return tri
        image = {tri, mate, c1, c2}
        if len(image) != 4 or image & seen_images:
            return tri
        seen_images |= image
    return None


def claim_report(g: Graph) -> dict:
    """All four claim verdicts keyed by claim name."""
    return {
        "claim1": check_claim1(g),
        "claim2": check_claim2(g),
        "claim3": check_claim3(g),
        "claim4": check_claim4(g),
    }


# -- vertex reduction ---------------------------------------------------------


def check_lemma1_hypotheses(g: Graph) -> bool:
    """t(v) >= n/2 - 1 for all v and t(u, v) >= n - 2 for all pairs."""
    n = g.n
    st = g.stats()
    if any(2 * tv < n - 2 for tv in st.per_vertex):
        return False
    for u in range(n):
        for v in range(u + 1, n):
            if g.triangles_at_pair(u, v) < n - 2:
                return False
    return True


@dataclass(frozen=True)
class ReductionStep:
    order: int               # order before this deletion
    vertices: tuple          # original labels, 1 or 2 of them
    destroyed: int
    allowance: Fraction      # strict upper bound on destroyed


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple
    terminal: Graph
    terminal_labels: tuple   # original labels of surviving vertices
    initial_triangles: int
    accounting_ok: bool      # t(G_l) >= t(G) - sum of allowances

    @property
    def terminal_order(self) -> int:
        return self.terminal.n


def _reduction_target(g: Graph):
    """Vertices to delete this round, or None: the least-indexed vertex
    with t(v) < order/2 - 1, else the lexicographically least pair with
    t(u, v) < order - 2."""
    j1 = g.n
    st = g.stats()
    for v in range(j1):
        if 2 * st.per_vertex[v] < j1 - 2:
            return (v,), Fraction(j1, 2) - 1
    for u in range(j1):
        for v in range(u + 1, j1):
            if g.triangles_at_pair(u, v) < j1 - 2:
                return (u, v), Fraction(j1 - 2)
    return None


def reduce_lemma1(g: Graph) -> ReductionTrace:
    """Delete low-triangle vertices until the degree hypotheses hold.

    Deterministic: the single-vertex rule is tried before the pair rule
    each round, breaking ties by least index / lexicographic pair.
    """
    labels = list(range(g.n))
    cur = g.copy()
    t0 = cur.triangle_count()
    steps = []
    spent = Fraction(0)
    while cur.n:
        found = _reduction_target(cur)
        if found is None:
            break
        victims, allowance = found
        before = cur.triangle_count()
        nxt = delete_vertices(cur, victims)
        steps.append(
            ReductionStep(
                cur.n,
                tuple(labels[v] for v in victims),
                before - nxt.triangle_count(),
                allowance,
            )
        )
        spent += allowance
        labels = [lab for i, lab in enumerate(labels) if i not in victims]
        cur = nxt
    ok = cur.triangle_count() >= t0 - spent
    return ReductionTrace(tuple(steps), cur, tuple(labels), t0, ok)
