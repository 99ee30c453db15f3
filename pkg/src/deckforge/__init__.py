"""Decks of induced subgraphs for small graphs: computation, reconstruction
of graph invariants from decks, and exhaustive verification searches.
"""

from .canon import (
    CanonicalCode,
    SubgraphCoder,
    are_isomorphic,
    canonical_form,
    canonical_graph,
)
from .deck import (
    Deck,
    DeckParams,
    compute_deck,
    count_induced_direct,
    count_induced_from_deck,
    decks_equal,
    derive_subdeck,
    edge_count_from_deck,
)
from .errors import (
    BadCard,
    BudgetExceeded,
    DeckforgeError,
    ExcludedCase,
    GirthTooSmall,
    InconsistentDeck,
    InconsistentInput,
    InvalidCardSize,
    InvalidParameter,
    InvalidVertexSet,
    IsAPath,
    MissingBoundary,
    NotACenter,
    NotAcyclicDeck,
    NotATree,
    NotConnected,
    OutOfValidityRange,
    ParseError,
)
from .graphs import (
    Graph,
    complete_graph,
    components,
    cycle_graph,
    degree_sequence,
    diameter,
    disjoint_union,
    empty_graph,
    girth,
    graph6_decode,
    graph6_encode,
    graph_from_edges,
    induced_subgraph,
    is_connected,
    is_forest,
    is_tree,
    path_graph,
    radius,
    spider_graph,
    star_graph,
)
from .reconstruct import (
    CONNECTED,
    CountingTable,
    components_from_deck,
    degree_list_from_deck,
    j_center_count_from_deck,
    j_central_edge_count_from_deck,
    maximal_counts_direct,
    solve_maximal_counts,
)
from .search import (
    NAMED_CONSTRUCTIONS,
    Classification,
    NamedConstruction,
    SearchReport,
    classify_deck,
    enumerate_cyclic_candidates,
    enumerate_forests,
    enumerate_trees,
    find_ambiguous,
    find_equal_deck_tree_pairs,
    named_counterexample,
)
from .trees import (
    MarkingReport,
    SpiderShape,
    branch_vertices,
    full_paths_count,
    is_ell_spiderly,
    legs,
    run_marking,
    spider_shape,
)
from .verify import SUITES, run_suite
from .vines import (
    Evine,
    Vine,
    VineKind,
    ball,
    classify_vine,
    eball,
    j_central_edges,
    j_centers,
    k_from_deck,
    k_of_graph,
    maximal_vine_at,
)

__version__ = "0.1.0"
