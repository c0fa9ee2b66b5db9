"""Tilings from nonzero GF(2) kernel vectors and back."""
from __future__ import annotations

from dataclasses import dataclass

from ..exact_arith import GF2
from ..grid import BLACK, WHITE, GridGraph, Point, color_of
from ..kernel import KernelVector, structured_basis, violations
from .active import MalformedVectorError, active_adjacency, validate_active_graph
from .chunks import Chunk, classify_chunk
from .faces import TilingError, extract_chunks

DEFAULT_MAX_DIM = 20


@dataclass(frozen=True)
class Tiling:
    """Tiles of R = [0, m-1] x [0, n-1] in canonical (sorted) order."""

    m: int
    n: int
    color: str
    chunks: tuple[Chunk, ...]

    def __post_init__(self):
        object.__setattr__(self, "chunks", tuple(sorted(self.chunks)))

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "color": self.color,
                "chunks": [c.to_json() for c in self.chunks]}

    @classmethod
    def from_json(cls, data: dict) -> "Tiling":
        return cls(int(data["m"]), int(data["n"]), data["color"],
                   tuple(Chunk.from_json(c) for c in data["chunks"]))

    def tile_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for c in self.chunks:
            counts[c.tile] = counts.get(c.tile, 0) + 1
        return counts


def phi(u: KernelVector, validate: bool = True) -> Tiling:
    """Tiling cut out by the segments of the active graph of ``u``."""
    if u.field.p != 2:
        raise MalformedVectorError(f"expected a GF(2) vector, got {u.field}")
    if u.is_zero():
        raise MalformedVectorError("the zero vector has no tiling")
    g = active_adjacency(u)
    if validate:
        validate_active_graph(g)
    chunks = [classify_chunk(poly, u.m, u.n) for poly in extract_chunks(g)]
    return Tiling(u.m, u.n, u.polarity, tuple(chunks))


def _side_points(p: Point, q: Point):
    steps = max(abs(q[0] - p[0]), abs(q[1] - p[1]))
    dx, dy = (q[0] - p[0]) // steps, (q[1] - p[1]) // steps
    return [(p[0] + k * dx, p[1] + k * dy) for k in range(steps + 1)]


def phi_inverse(t: Tiling, check: bool = True) -> KernelVector:
    """GF(2) vector equal to 1 on the points of the tiling's color along active sides."""
    if t.color not in (BLACK, WHITE):
        raise TilingError(f"unknown tiling color {t.color!r}", "color")
    values = {}
    for chunk in t.chunks:
        for (p, q), active in zip(chunk.sides(), chunk.side_active):
            if active:
                for pt in _side_points(p, q):
                    if color_of(pt) == t.color:
                        values[pt] = 1
    u = KernelVector(GridGraph(t.m, t.n), t.color, GF2, values)
    if check:
        bad = violations(u)
        if bad or u.is_zero():
            where = f"odd neighbor count at {bad[0]}" if bad else "no active sides"
            raise TilingError(f"tiling does not come from a kernel vector: {where}", "kernel-membership")
        if phi(u) != t:
            raise TilingError("tiling is not reproduced by its own vector", "roundtrip")
    return u


def gf2_kernel_masks(m: int, n: int, polarity: str) -> list[int]:
    return [v.to_bits() for v in structured_basis(m, n, polarity, GF2)]


def kernel_elements(m: int, n: int, polarity: str, max_dim: int = DEFAULT_MAX_DIM):
    """Nonzero GF(2) kernel vectors, coordinate masks in binary counting order."""
    basis = gf2_kernel_masks(m, n, polarity)
    if len(basis) > max_dim:
        raise ValueError(f"kernel dimension {len(basis)} exceeds the cap {max_dim}")
    g = GridGraph(m, n)
    for coords in range(1, 1 << len(basis)):
        mask = 0
        for i, b in enumerate(basis):
            if coords >> i & 1:
                mask ^= b
        yield KernelVector.from_bits(g, polarity, mask)


def enumerate_tilings(m: int, n: int, max_dim: int = DEFAULT_MAX_DIM) -> tuple[list[Tiling], list[Tiling]]:
    """All black and all white tilings of R for the m x n graph."""
    if m < 2 or n < 2:
        raise ValueError(f"tilings need m, n >= 2, got {m}x{n}")
    black = [phi(u) for u in kernel_elements(m, n, BLACK, max_dim)]
    white = [phi(u) for u in kernel_elements(m, n, WHITE, max_dim)]
    return black, white


def add_tilings(t1: Tiling, t2: Tiling) -> Tiling:
    """Sum of two same-color tilings through their GF(2) vectors."""
    if (t1.m, t1.n) != (t2.m, t2.n):
        raise ValueError("tilings of different rectangles")
    if t1.color != t2.color:
        raise ValueError(f"cannot add a {t1.color} tiling to a {t2.color} tiling")
    total = phi_inverse(t1) + phi_inverse(t2)
    if total.is_zero():
        raise ValueError("equal tilings sum to zero, which has no tiling")
    return phi(total)
