"""Random-walk and electric-network invariants of finite simple connected graphs."""

from .errors import AutomorphismCapExceeded, GraphError, NumericalError
from .graphs import (
    CompositeSpec,
    Graph,
    build_graph,
    conjoin,
    diameter,
    distance_matrix,
    family_label,
    generate,
    lcf,
    parse_graph,
    write_graph,
)
from .resistance import (
    ResistanceData,
    degree_kirchhoff_index,
    effective_resistance,
    kirchhoff_index,
    resistance_row_sums,
)
from .symmetry import (
    IntersectionArray,
    OrbitPartition,
    Permutation,
    SymmetryReport,
    automorphisms,
    classify,
    edge_orbits,
    is_distance_regular,
    is_hs,
    is_walk_regular,
    orbit_partitions,
    vertex_orbits,
)
from .verify import (
    VerificationRecord,
    standard_corpus,
    verify_base_identities,
    verify_composite,
    verify_orbit_asymmetry,
    verify_windmill,
)
from .walks import (
    WalkData,
    hitting_asymmetry,
    hitting_times_solve,
    hitting_times_tetali,
    kemeny,
    kemeny_spectral,
    stationary,
    transition_matrix,
    walk_data,
)

__version__ = "0.1.0"

__all__ = [
    "AutomorphismCapExceeded",
    "CompositeSpec",
    "Graph",
    "GraphError",
    "IntersectionArray",
    "NumericalError",
    "OrbitPartition",
    "Permutation",
    "ResistanceData",
    "SymmetryReport",
    "VerificationRecord",
    "WalkData",
    "automorphisms",
    "build_graph",
    "classify",
    "conjoin",
    "degree_kirchhoff_index",
    "diameter",
    "distance_matrix",
    "edge_orbits",
    "effective_resistance",
    "family_label",
    "generate",
    "hitting_asymmetry",
    "hitting_times_solve",
    "hitting_times_tetali",
    "is_distance_regular",
    "is_hs",
    "is_walk_regular",
    "kemeny",
    "kemeny_spectral",
    "kirchhoff_index",
    "lcf",
    "orbit_partitions",
    "parse_graph",
    "resistance_row_sums",
    "stationary",
    "standard_corpus",
    "transition_matrix",
    "verify_base_identities",
    "verify_composite",
    "verify_orbit_asymmetry",
    "verify_windmill",
    "vertex_orbits",
    "walk_data",
    "write_graph",
]
