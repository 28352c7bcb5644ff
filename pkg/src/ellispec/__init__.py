"""Graph clustering with an ellipsoid-based grouping stage.

Pipeline: spectral embedding through the normalized Laplacian, then an
origin-centered minimum-volume enclosing ellipsoid whose boundary columns
act as cluster representatives (thinned by successive projection), then
nearest-representative assignment.  A k-means based spectral baseline,
a synthetic benchmark generator, and AC/NMI/conductance metrics round
out the toolkit.
"""

from ._errors import (
    ConvergenceError,
    EllispecError,
    InvalidGraphError,
    InvalidPartitionError,
    RankError,
)
from .eigen import Embedding, bottom_k_eigs, gap_diagnostics
from .elli import ElliResult, alpha_theta_profile, elli_cluster, group_columns
from .graph import (
    NormalizedLaplacian,
    Partition,
    WeightedGraph,
    conductance,
    normalized_laplacian,
    partition_profile,
)
from .ingest import VectorDataset, cosine_knn_graph, load_csv, load_vds
from .io import read_graph, read_labels, write_graph, write_labels
from .ksc import KscRun, kmeanspp_seed, ksc_cluster, lloyd
from .metrics import accuracy, contingency, nmi, timed
from .mvee import Ellipsoid, active_indices, solve_mvee
from .spa import spa_select
from .synth import (
    SynthInstance,
    conductance_bound,
    delta_sweep,
    standard_suites,
    synth_adjacency,
)

__all__ = [
    "ConvergenceError",
    "EllispecError",
    "InvalidGraphError",
    "InvalidPartitionError",
    "RankError",
    "Embedding",
    "bottom_k_eigs",
    "gap_diagnostics",
    "ElliResult",
    "alpha_theta_profile",
    "elli_cluster",
    "group_columns",
    "NormalizedLaplacian",
    "Partition",
    "WeightedGraph",
    "conductance",
    "normalized_laplacian",
    "partition_profile",
    "VectorDataset",
    "cosine_knn_graph",
    "load_csv",
    "load_vds",
    "read_graph",
    "read_labels",
    "write_graph",
    "write_labels",
    "KscRun",
    "kmeanspp_seed",
    "ksc_cluster",
    "lloyd",
    "accuracy",
    "contingency",
    "nmi",
    "timed",
    "Ellipsoid",
    "active_indices",
    "solve_mvee",
    "spa_select",
    "SynthInstance",
    "conductance_bound",
    "delta_sweep",
    "standard_suites",
    "synth_adjacency",
]
