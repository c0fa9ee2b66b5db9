"""Kernels of rectangular grid adjacency matrices and the tilings they encode."""
from .exact_arith import GF2, GF3, GF5, GF7, QQ, FieldSpec, FieldValue, canonical, invert
from .grid import (
    BLACK,
    BLACK_TO_WHITE,
    WHITE,
    WHITE_TO_BLACK,
    BipartiteMatrix,
    GridDecomposition,
    GridGraph,
    adjacency_matrix,
    build_grid,
    decomposition,
)
from .kernel import (
    BasisSet,
    KernelVector,
    check_symmetries,
    kernel_dimensions,
    neighbor_sum,
    odd_extend,
    oracle_nullspace,
    square_kernel_from_seed,
    structured_basis,
)
from .tiling import (
    Chunk,
    Tiling,
    active_adjacency,
    active_set,
    add_tilings,
    classify_chunk,
    classify_star,
    enumerate_tilings,
    extract_chunks,
    lift,
    phi,
    phi_inverse,
)

__version__ = "0.1.0"
