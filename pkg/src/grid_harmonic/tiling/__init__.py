"""GF(2) kernel vectors as tilings of R = [0, m-1] x [0, n-1]."""
from .active import (
    ActiveGraph,
    MalformedVectorError,
    active_adjacency,
    active_set,
    classify_star,
    crossing_pairs,
    interior_star_shapes,
    validate_active_graph,
)
from .bijection import Tiling, add_tilings, enumerate_tilings, kernel_elements, phi, phi_inverse
from .chunks import TILE_TYPES, Chunk, classify_chunk
from .faces import RawPolygon, TilingError, extract_chunks
from .lift import SignedLift, components, lift

__all__ = [
    "ActiveGraph", "Chunk", "MalformedVectorError", "RawPolygon", "SignedLift", "TILE_TYPES",
    "Tiling", "TilingError", "active_adjacency", "active_set", "add_tilings", "classify_chunk",
    "classify_star", "components", "crossing_pairs", "enumerate_tilings", "extract_chunks",
    "interior_star_shapes", "kernel_elements", "lift", "phi", "phi_inverse",
    "validate_active_graph",
]
