"""Lines in finite metric spaces and pseudometric betweennesses."""

from .betweenness import (
    AnchoredPoset,
    BetweennessRelation,
    anchored_poset,
    dilworth_decompose,
    enumerate_pseudometric_betweennesses,
    fact_consequences,
    is_geodesic_sequence,
    is_geodesic_set,
    longest_chain,
    longest_geodesic,
    maximum_antichain,
    validate_axioms,
)
from .graphs import (
    Graph,
    bfs_distances,
    connected_graphs,
    gen_complete,
    gen_complete_kpartite,
    gen_cycle,
    gen_path,
    gen_subdivided_path,
    graph_metric,
    induced_path_from_walk,
    parse_edge_list,
    parse_graph6,
    to_graph6,
    walk_intermediate_point,
)
from .lines import Line, LineSet, all_lines, generator_graph, line, prune_to_min_degree, universal_line
from .metric import (
    MetricSpace,
    between,
    collinear,
    diameter,
    distance_set,
    induced_betweenness,
    random_metric,
    subspace,
    validate_metric,
)
from .relations import (
    PairRelationKind,
    are_antipodal,
    are_parallel,
    classify_pair_relation,
    inner_outer,
    is_parallelogram,
)
from .verify import scaling_fit, scan_corpus, verify_bounds, verify_conjecture
from .witnesses import (
    WitnessReport,
    witness_3metric,
    witness_bounded_distances,
    witness_from_geodesic,
    witness_graph,
    witness_graph_alpha,
    witness_graph_gamma,
    witness_metric,
    witness_pseudometric,
)

__version__ = "0.1.0"
