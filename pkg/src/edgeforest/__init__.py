"""Exact and simulated tree counts of the random edge-ordering forest process."""

__version__ = "0.1.0"

from .collisions import (
    CollisionGroup,
    CollisionReport,
    fam_a_triple,
    fam_b_pair,
    sweep,
    verify_known,
)
from .families import (
    GS,
    K4,
    Complete,
    CompleteBipartite,
    Di,
    FamilySpec,
    GSPlus,
    Paw,
    Star,
    Triangle,
    canonical,
    classify,
    construct_family,
)
from .formulas import (
    audit_complete_bipartite,
    binomial,
    gs_two_tree_double_sum,
    p1_di,
    p1_family,
    p1_gs,
    p1_gs_plus,
    p1_k4,
    p1_paw,
    p_complete,
    p_complete_bipartite,
    vandermonde_sum,
)
from .graph import (
    Graph,
    are_isomorphic,
    emit_graph6,
    max_disjoint_edges_capped,
    parse_edge_list,
    parse_graph6,
    strip_isolated,
)
from .process import (
    ForestResult,
    McEstimate,
    TreeDistribution,
    estimate_with_stderr,
    exact_bruteforce,
    exact_subset_dp,
    monte_carlo,
    run_ordering,
)
