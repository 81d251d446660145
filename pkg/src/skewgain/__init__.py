"""Balance, shortest-path gains, distance matrices and spectra for complex gain graphs."""

__version__ = "0.1.0"

from .balance import (
    BalanceCertificate,
    OrientedCycle,
    associated_complete_graph,
    balance_certificate,
    balance_via_distance_cospectrality,
    cycle_gain,
    is_balanced,
    verify_certificate,
)
from .cycles import (
    CycleParams,
    agp_sum_closed,
    agp_sum_direct,
    canonical_odd_cycle,
    cycle_distance_spectrum_closed,
    unit_cycle_spectrum_closed,
)
from .distance import DistanceMatrix, distance_matrix, distance_matrix_max, distance_matrix_min, is_hermitian
from .errors import *  # noqa: F401,F403
from .generators import RandomModel, random_csg, random_switching
from .graph import (
    GainGraph,
    SwitchingFunction,
    adjacency_matrix,
    apply_switching,
    blocks,
    build_graph,
    gain,
    induced_subgraph,
    is_bipartite,
    is_connected,
    magnitude_graph,
)
from .io import GraphFile, example_graph, load_graph_file, parse_graph_file, serialize_graph
from .paths import (
    CompatibilityReport,
    GainSet,
    bfs_distances,
    compatibility_report,
    gain_extrema,
    pair_compatibility,
    shortest_path_gain_set,
)
from .spectra import CharPoly, Spectrum, char_poly, char_poly_elementary, cospectral, hermitian_eigenvalues
