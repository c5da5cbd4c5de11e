"""Small-world measurements on large edge-list graphs."""

__version__ = "0.1.0"

from . import _threads  # noqa: F401  (threading-layer setup before any kernel runs)

from .components import (
    ComponentKind,
    ComponentLabeling,
    connected_components,
    cross_component_failure_probability,
    strongly_connected_components,
    weakly_connected_components,
)
from .compare import CompareTable, RankRow, cross_rank_table, top_k
from .errors import (
    DataError,
    ParseError,
    SmallWorldError,
    UndefinedAssortativityError,
    UndefinedStatisticError,
    UsageError,
)
from .graph import (
    DirectedGraph,
    EdgeList,
    IdMap,
    UndirectedGraph,
    build_directed,
    build_undirected,
    load_graph,
    parse_edge_list,
    read_edge_list,
    undirected_view,
)
from .metrics import (
    DegreeHistogram,
    DegreeMode,
    SummaryStats,
    average_clustering,
    degree_assortativity,
    degree_histogram,
    directed_assortativity,
    local_clustering,
    summary_stats,
)
from .milgram import (
    MilgramConfig,
    MilgramMode,
    MilgramResult,
    exact_average_path_length,
    partition_nodes,
    run_milgram,
    shortest_path_length,
)
from .random_model import ErParams, er_generate, matched_er_baseline
