"""Workbench for triangle counts in graphs avoiding small edge blow-ups.

Core pieces: bitset graphs with triangle statistics, the extremal
constructions and closed-form bounds, fast forbidden-pattern detection,
exact and heuristic extremal searches, and executable versions of the
weight/reduction arguments behind the bounds.
"""

from ._kernels import BACKEND
from .graph import (
    Graph,
    TriangleStats,
    clean,
    delete_vertices,
    disjoint_union,
    empty_graph,
    from_edges,
    induced_subgraph,
    join,
)
from .families import (
    FamilySpec,
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
)
from .formulas import (
    BelowThreshold,
    BoundValue,
    ex_c33_edges,
    ex_c33_triangles_bound,
    ex_m23_triangles,
    ex_p33_triangles,
)
from .detect import Embedding, Pattern, contains, creates_pattern, is_free
from .canon import canonical_form, canonical_graph
from .search import (
    SearchOutcome,
    SearchParams,
    exact_generalized_turan,
    explore_conjecture,
    free_classes,
    local_search,
)
from .verify import (
    ClaimVerdict,
    ReductionTrace,
    UncleanedGraph,
    WeightProfile,
    check_claim1,
    check_claim2,
    check_claim3,
    check_claim4,
    check_lemma1_hypotheses,
    claim_report,
    reduce_lemma1,
    weight_profile,
)
from . import graph6

__version__ = "0.1.0"
