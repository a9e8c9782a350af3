"""Exact bondage-number computation and structural certification for
chordal graphs."""

__version__ = "0.1.0"

from .bondage import (
    BondageResult,
    UpperBoundReport,
    bondage,
    chordal_upper_bound,
    clique_bondage_witness,
    fink_bound,
    hartnell_rall_bound,
    upper_bound_report,
)
from .certify import (
    BondageCertificate,
    ClaimsReport,
    DirectWitness,
    EdgeCertificate,
    PairCertificate,
    PartitionDistance,
    StructuralWitness,
    certificate_verifies,
    check_claim1,
    check_claims_2_3,
    extract_certificate,
    find_W,
    format_diagnostic_bundle,
    minimize_psi,
    partition_distance,
)
from .chordal import (
    HoleWitness,
    all_cliques,
    is_chordal,
    longest_induced_cycle,
    max_clique,
    maximal_cliques,
    maximum_cardinality_search,
)
from .domination import (
    DominationResult,
    all_min_dominating_sets,
    gamma,
    is_dominating,
)
from .edgelist import format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from .errors import (
    BondageUndefined,
    GraphError,
    LimitExceeded,
    NotChordalError,
    NotConnectedError,
    TheoremViolation,
)
from .families import (
    SplitMix64,
    cartesian_product,
    clique,
    corona,
    cycle,
    path,
    random_block_graph,
    random_chordal,
    random_tree,
    star,
)
from .graph import (
    Graph,
    build_graph,
    connected_components,
    degree_stats,
    distance,
    induced_subgraph,
    is_connected,
    is_independent_set,
    remove_edges,
)
