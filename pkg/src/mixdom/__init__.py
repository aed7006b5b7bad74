"""Weighted mixed domination: exact solvers, 2-approximations for the
vertex-favourable weight regimes, and hardness-reduction gadgets."""

from .domination import (
    MixedSet,
    Regime,
    WeightConfig,
    closure_vertices,
    is_mixed_dominating_set,
    is_vertex_cover,
    weight,
)
from .graph import Graph, build, induced_subgraph, isolated_vertices, read_graph, write_graph
from .lpvc import check_crown_properties, lp_based_vertex_cover, solve_lpvc_half_integral
from .matching import (
    greedy_maximal_matching,
    koenig_min_vertex_cover,
    maximum_matching_bipartite,
    maximum_matching_general,
)
from .solvers import (
    BudgetExceeded,
    Method,
    SolveResult,
    approx_alg1,
    approx_edge_heavy,
    exact_vertex_cover,
    exact_wmd,
    solve,
)

__version__ = "0.1.0"
