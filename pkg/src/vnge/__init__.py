"""Von Neumann graph entropy: exact and quadratic variants, closed-form
edge increments, entropy-driven growth, and correlation-network studies."""

__version__ = "0.1.0"

from .errors import (
    DegenerateRatioError,
    DisconnectedError,
    EdgeExistsError,
    EdgeListFormatError,
    EmptyEdgeSetError,
    GraphCompleteError,
    InconsistentStateError,
    IsolatedNodeError,
    NoConvergenceError,
    NodeIndexError,
    NotNormalizedError,
    NotSymmetricError,
    PanelFormatError,
    SelfLoopError,
    TooFewCandidatesError,
    VngeError,
)
from .graph import (
    DensityKind,
    Graph,
    adjacency_matrix,
    complement_edges,
    density_matrix,
    from_edge_list,
    geodesic_distances,
    is_connected,
    laplacian,
    normalized_laplacian,
    read_edge_list,
    write_edge_list,
)
from .spectral import (
    Spectrum,
    density_spectrum,
    entropy_of_spectrum,
    symmetric_eigenvalues,
    von_neumann_entropy,
)
from .quadratic import (
    GrowthSums,
    approx_entropy_laplacian,
    approx_entropy_normalized,
    delta_approx_laplacian,
    delta_approx_normalized,
)
from .generators import (
    BadParamError,
    BAParams,
    ERParams,
    WSParams,
    barabasi_albert,
    complete_graph,
    erdos_renyi,
    generate,
    path_graph,
    ring_lattice,
    rng_stream,
    triangle_seed,
    watts_strogatz,
)
from .netstats import (
    LengthMismatchError,
    NoPairsError,
    StatVector,
    ZeroVarianceError,
    avg_clustering_coefficient,
    avg_shortest_path_length,
    index_of_dispersion,
    pearson,
    small_worldness_omega,
    spearman,
    stat_vector,
)
from .evolution import (
    AddEdgeAction,
    AddNodeAction,
    EntropyVariant,
    GrowthStep,
    GrowthTrace,
    Heuristic,
    Objective,
    PredictabilityPair,
    edge_growth,
    exact_entropy_increments,
    heuristic_accuracy,
    heuristic_predict,
    node_growth,
    predictability_errors,
    replay_trace,
    trace_statistics,
    true_best_edges,
)
from .ingest import (
    CorrNetParams,
    TimeSeriesPanel,
    TooShortError,
    WindowOutOfRangeError,
    filter_connected_fullsize,
    load_price_csv,
    network_sequence,
    panel_from_prices,
    window_correlation_network,
)
