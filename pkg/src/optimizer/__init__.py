from .config import OptimizerConfig, MeshSearchSettings, MOVE_KINDS, INNER_METHODS
from .mesh_search import inner_search, InnerResult, householder_basis
from .moves import (
    IdentityResolution,
    identity_catalog,
    resolution_supports,
    random_initial_circuit,
    random_move,
    propose_move,
)
from .annealer import OptRun, TrajectoryPoint, accept, optimize, reoptimize_tail, tail_indices
