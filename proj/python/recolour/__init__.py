"""Graph recolouring reconfiguration toolkit (Python bindings)."""

from ._core import (
    Colouring,
    Graph,
    LimitExceeded,
    ParseError,
    PreconditionError,
    RecolourError,
    SequenceError,
    apply_sequence,
    bfs_distance,
    build_g1,
    build_gn,
    chromatic_number,
    clique_gn,
    colour_gn,
    complement,
    complete_graph,
    cycle_graph,
    enumerate_colourings,
    frozen_colouring_gn,
    g1_colouring,
    g1_frozen_colouring,
    gn_vertex_count,
    is_3k1_free,
    is_frozen,
    is_proper,
    is_weakly_chordal,
    max_clique,
    max_matching,
    normalize_to_partition,
    optimal_colouring_3k1,
    path_graph,
    petersen_graph,
    random_3k1_free,
    random_chordal,
    rare_colour,
    recolour_path_3k1,
    recolouring_graph,
    rename_partition,
    substitute,
    to_dot,
    verify_counterexample,
)

__version__ = "0.1.0"
