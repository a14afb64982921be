"""Anti-Ramsey numbers for t edge-disjoint rainbow spanning trees."""

from .extremal import certify_avoiding, extremal_coloring, rainbow_coloring
from .formulas import (
    AntiRamseyValue,
    MultipartiteShape,
    check_concavity,
    f_multipartite,
    r_bipartite,
    r_complete,
    r_multipartite,
)
from .general import AntiRamseyResult, Branch, NoAvoidingColoring, avoiding_coloring_exists, packing_feasible, r_general
from .graph import (
    ColoredMultigraph,
    Edge,
    GraphError,
    PartitionStats,
    VertexPartition,
    classify_edges,
    complete_graph,
    complete_multipartite,
    partition_stats,
    restrict_to_blocks,
)
from .oracle import OracleResult, enumerate_colorings, r_oracle
from .partitions import (
    NoPartitionInRange,
    PartitionCapExceeded,
    common_refinement,
    enumerate_partitions,
    maximize_over_partitions,
)
from .rainbow import (
    ExtensionCertificate,
    ForestFamily,
    SearchBudgetExceeded,
    extension_feasible,
    find_color_disjoint_extension,
    find_color_disjoint_rainbow_trees,
    find_edge_disjoint_rainbow_trees,
    has_color_disjoint_trees,
    residual_graph,
    seed_forests,
)
