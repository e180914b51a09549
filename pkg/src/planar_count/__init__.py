"""Exact counting of regular bipartite multigraphs by the size of their largest planar matching."""

from planar_count.budget import BudgetExceeded
from planar_count.multigraph import (
    BipartiteMultigraph,
    Configuration,
    QuasiConfiguration,
    configuration_count_of,
    enumerate_configurations,
    enumerate_multigraphs,
    expand_configuration,
    planar_matching_size,
    planar_subgraph_size,
    project,
    transpose,
)
from planar_count.tableaux import (
    TableauPair,
    YoungTableau,
    count_tableau_pairs,
    inverse_rsk,
    row_insert,
    rsk,
)
from planar_count.walks import (
    Phi,
    RepresentativeWalk,
    Walk,
    check_condition_C,
    count_chamber_walks,
    count_restricted_walks,
    phi,
    rho,
    signed_interleaved_sum,
    signed_toeplitz_sum,
)

__version__ = "0.1.0"
