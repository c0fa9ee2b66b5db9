"""Kernels of the black-to-white and white-to-black grid adjacency matrices.

Two independent routes compute them: :func:`structured_basis` builds
{0, 1, -1} bases from seeded square kernels and odd extension across the zero
grid, and :func:`oracle_nullspace` runs exact elimination on the adjacency
matrix itself.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .exact_arith import GF2, FieldSpec, Payload
from .grid import (
    BLACK,
    BLACK_TO_WHITE,
    WHITE,
    WHITE_TO_BLACK,
    BipartiteMatrix,
    GridGraph,
    Point,
    color_of,
    decomposition,
    grid_parameter,
    opposite,
)
from .linalg import Echelon, GF2Echelon, bits_from_indices, indices_from_bits, rank_of


class KernelError(ValueError):
    pass


@dataclass(frozen=True)
class KernelVector:
    """Field values on the points of one color; zero everywhere else.

    ``values`` holds only nonzero payloads.  Reading a point off the graph
    or of the other color gives zero.
    """

    graph: GridGraph
    polarity: str
    field: FieldSpec
    values: Mapping[Point, Payload] = field(default_factory=dict)

    def __post_init__(self):
        if self.polarity not in (BLACK, WHITE):
            raise KernelError(f"unknown polarity {self.polarity!r}")
        clean = {}
        for p, v in self.values.items():
            if v == 0:
                continue
            if p not in self.graph:
                raise KernelError(f"point {p} outside the {self.graph.m}x{self.graph.n} graph")
            if color_of(p) != self.polarity:
                raise KernelError(f"point {p} is not {self.polarity}")
            clean[p] = v
        object.__setattr__(self, "values", clean)

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def n(self) -> int:
        return self.graph.n

    def __getitem__(self, p: Point) -> Payload:
        return self.values.get(p, self.field.zero)

    def __eq__(self, other):
        if not isinstance(other, KernelVector):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.polarity == other.polarity
            and self.field == other.field
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.graph, self.polarity, self.field, frozenset(self.values.items())))

    def is_zero(self) -> bool:
        return not self.values

    def support(self) -> frozenset:
        return frozenset(self.values)

    def items(self) -> list[tuple[Point, Payload]]:
        """Nonzero entries in row-major order."""
        return sorted(self.values.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __add__(self, other: "KernelVector") -> "KernelVector":
        self._check_compatible(other)
        f = self.field
        out = dict(self.values)
        for p, v in other.values.items():
            out[p] = f.add(out.get(p, f.zero), v)
        return self._with(out)

    def __neg__(self) -> "KernelVector":
        return self._with({p: self.field.neg(v) for p, v in self.values.items()})

    def __sub__(self, other: "KernelVector") -> "KernelVector":
        return self + (-other)

    def _check_compatible(self, other):
        if (self.graph, self.polarity, self.field) != (other.graph, other.polarity, other.field):
            raise KernelError("vectors live in different spaces")

    def _with(self, values) -> "KernelVector":
        return KernelVector(self.graph, self.polarity, self.field, values)

    def to_field(self, target: FieldSpec) -> "KernelVector":
        """Map integer-valued entries into another field."""
        out = {}
        for p, v in self.values.items():
            iv = self.field.signed(v)
            if getattr(iv, "denominator", 1) != 1:
                raise KernelError(f"entry {iv} at {p} is not an integer")
            out[p] = target.embed(int(iv))
        return KernelVector(self.graph, self.polarity, target, out)

    def to_bits(self) -> int:
        """Packed GF(2) form: bit ``i`` is the i-th point of the polarity color."""
        if self.field.p != 2:
            raise KernelError("packed bits are only defined over GF(2)")
        idx = self.graph.index(self.polarity)
        return bits_from_indices(idx[p] for p in self.values)

    @classmethod
    def from_bits(cls, graph: GridGraph, polarity: str, mask: int) -> "KernelVector":
        pts = graph.colored(polarity)
        return cls(graph, polarity, GF2, {pts[i]: 1 for i in indices_from_bits(mask)})

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "polarity": self.polarity,
            "field": self.field.token,
            "entries": [[x, y, self.field.format(v)] for (x, y), v in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "KernelVector":
        f = FieldSpec.parse(data["field"])
        values = {(int(x), int(y)): f.parse_value(str(s)) for x, y, s in data["entries"]}
        return cls(GridGraph(int(data["m"]), int(data["n"])), data["polarity"], f, values)


@dataclass(frozen=True)
class BasisSet:
    field: FieldSpec
    polarity: str
    vectors: tuple[KernelVector, ...]

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def to_json(self) -> dict:
        return {
            "field": self.field.token,
            "polarity": self.polarity,
            "vectors": [v.to_json() for v in self.vectors],
        }


def kernel_dimensions(m: int, n: int) -> tuple[int, int]:
    """``(dim ker BW, dim ker WB)`` from ``c = gcd(m+1, n+1) - 1``."""
    if m < 1 or n < 1:
        raise ValueError(f"grid dimensions must be positive, got {m}x{n}")
    c = grid_parameter(m, n)
    return (c + 1) // 2, c // 2


def neighbor_sum(v: KernelVector, p: Point) -> Payload:
    f = v.field
    x, y = p
    total = f.zero
    for q in ((x, y - 1), (x, y + 1), (x - 1, y), (x + 1, y)):
        val = v.values.get(q)
        if val is not None:
            total = f.add(total, val)
    return total


def violations(v: KernelVector) -> list[Point]:
    """Opposite-color points where the neighbor sum is nonzero."""
    return [p for p in v.graph.colored(opposite(v.polarity)) if neighbor_sum(v, p) != 0]


def is_kernel_vector(v: KernelVector) -> bool:
    return not violations(v)


def first_column_support(c: int, polarity: str) -> list[Point]:
    start = 0 if polarity == BLACK else 1
    return [(0, y) for y in range(start, c, 2)]


def square_kernel_from_seed(
    c: int, polarity: str, seed: Mapping[Point, object], field: FieldSpec
) -> KernelVector:
    """Kernel vector on the c x c graph fixed by its first-column values.

    Columns fill left to right: the constraint at each opposite-color point
    ``(x, y)`` determines the value at ``(x + 1, y)``.
    """
    if c < 1:
        raise KernelError("square side must be positive")
    allowed = set(first_column_support(c, polarity))
    f = field
    vals: dict[Point, Payload] = {}
    for p, raw in seed.items():
        p = tuple(p)
        if p not in allowed:
            raise KernelError(f"seed point {p} is not a first-column {polarity} point of the {c}x{c} square")
        v = f.embed(raw) if isinstance(raw, int) else raw
        if v != 0:
            vals[p] = v
    zero = f.zero
    for x in range(c - 1):
        for y in range(c):
            if color_of((x, y)) == polarity:
                continue
            s = f.add(f.add(vals.get((x - 1, y), zero), vals.get((x, y - 1), zero)),
                      vals.get((x, y + 1), zero))
            if s != 0:
                vals[(x + 1, y)] = f.neg(s)
    return KernelVector(GridGraph(c, c), polarity, f, vals)


def _fold(coord: int, c: int) -> tuple[int, int]:
    """Square index along one axis and the mirrored local coordinate."""
    k, r = divmod(coord, c + 1)
    return k, (r if k % 2 == 0 else c - 1 - r)


def odd_extend(square_vec: KernelVector, m: int, n: int) -> KernelVector:
    """Extend a c x c kernel vector to m x n by signed reflections.

    The zero lines sit at ``x, y = k(c+1) - 1``; ``c + 1`` must divide both
    ``m + 1`` and ``n + 1``.
    """
    c = square_vec.m
    if square_vec.n != c:
        raise KernelError("odd extension starts from a square")
    if (m + 1) % (c + 1) or (n + 1) % (c + 1):
        raise KernelError(f"zero lines of spacing {c + 1} do not frame a {m}x{n} graph")
    f = square_vec.field
    out: dict[Point, Payload] = {}
    for (x, y) in GridGraph(m, n).points():
        if x % (c + 1) == c or y % (c + 1) == c:
            continue
        i, lx = _fold(x, c)
        j, ly = _fold(y, c)
        v = square_vec.values.get((lx, ly))
        if v is None:
            continue
        out[(x, y)] = v if (i + j) % 2 == 0 else f.neg(v)
    return KernelVector(GridGraph(m, n), square_vec.polarity, f, out)


def seed_vectors(c: int, polarity: str) -> list[dict[Point, int]]:
    """First-column seeds ``e_a, e_b - e_a, e_c - e_b, ...`` for one color."""
    pts = first_column_support(c, polarity)
    seeds = []
    for k, p in enumerate(pts):
        seed = {p: 1}
        if k:
            seed[pts[k - 1]] = -1
        seeds.append(seed)
    return seeds


def structured_basis(m: int, n: int, polarity: str, field: FieldSpec) -> BasisSet:
    """{0, 1, -1} basis of ker BW (black) or ker WB (white) in seed order."""
    c = grid_parameter(m, n)
    vectors = []
    if c >= 1:
        for seed in seed_vectors(c, polarity):
            sq = square_kernel_from_seed(c, polarity, seed, field)
            vectors.append(sq if (m, n) == (c, c) else odd_extend(sq, m, n))
    return BasisSet(field, polarity, tuple(vectors))


def oracle_nullspace(mat: BipartiteMatrix, field: FieldSpec) -> BasisSet:
    """Right nullspace of an adjacency matrix by exact elimination."""
    g = GridGraph(mat.m, mat.n)
    polarity = mat.column_color
    pts = g.colored(polarity)
    supports = mat.row_supports()
    vectors = []
    if field.p == 2:
        ech2 = GF2Echelon()
        for cols in supports:
            ech2.add(bits_from_indices(cols))
        for mask in ech2.nullspace(mat.cols):
            vectors.append(KernelVector.from_bits(g, polarity, mask))
    else:
        ech = Echelon(field)
        one = field.one
        for cols in supports:
            ech.add({c: one for c in cols})
        for x in ech.nullspace(mat.cols):
            vectors.append(KernelVector(g, polarity, field, {pts[c]: v for c, v in x.items()}))
    return BasisSet(field, polarity, tuple(vectors))


def oracle_nullity(mat: BipartiteMatrix, field: FieldSpec) -> int:
    """``cols - rank`` without back substitution."""
    rows = [{c: 1 for c in cols} for cols in mat.row_supports()]
    return mat.cols - rank_of(rows, field)


def vectors_rank(vectors: Iterable[KernelVector]) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    g, pol, f = vectors[0].graph, vectors[0].polarity, vectors[0].field
    idx = g.index(pol)
    rows = []
    for v in vectors:
        if (v.graph, v.polarity, v.field) != (g, pol, f):
            raise KernelError("vectors live in different spaces")
        rows.append({idx[p]: val for p, val in v.values.items()})
    return rank_of(rows, f)


def restrict_to_square(v: KernelVector, corner: Point, c: int) -> KernelVector:
    """Restriction to the c x c square at ``corner``, in local coordinates.

    The local color of a point may differ from its global color; the result
    takes the polarity of the square's local points that carry support.
    """
    x0, y0 = corner
    shift = (x0 + y0) % 2
    polarity = v.polarity if shift == 0 else opposite(v.polarity)
    vals = {}
    for (x, y), val in v.values.items():
        if x0 <= x < x0 + c and y0 <= y < y0 + c:
            vals[(x - x0, y - y0)] = val
    return KernelVector(GridGraph(c, c), polarity, v.field, vals)


@dataclass
class SymmetryReport:
    ok: bool
    violation: Point | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def check_symmetries(v: KernelVector) -> SymmetryReport:
    """Diagonal (anti)symmetry and odd reflection across zero columns.

    ``v[i, j]`` must equal ``v[j, i]`` when ``i + j`` is even and ``-v[j, i]``
    when odd; across every all-zero column ``x = m0`` the values must satisfy
    ``v[m0 - i, j] == -v[m0 + i, j]``.
    """
    f = v.field
    g = v.graph
    for (i, j) in g.points():
        if (j, i) not in g:
            continue
        a, b = v[(i, j)], v[(j, i)]
        expected = b if (i + j) % 2 == 0 else f.neg(b)
        if a != expected:
            kind = "symmetric" if (i + j) % 2 == 0 else "antisymmetric"
            return SymmetryReport(False, (i, j), f"v{(i, j)} = {f.format(a)} but diagonal {kind} partner is {f.format(b)}")
    occupied = {x for (x, _y) in v.values}
    for m0 in range(g.m):
        if m0 in occupied:
            continue
        for i in range(1, min(m0, g.m - 1 - m0) + 1):
            for j in range(g.n):
                a, b = v[(m0 - i, j)], v[(m0 + i, j)]
                if a != f.neg(b):
                    return SymmetryReport(False, (m0 - i, j),
                                          f"reflection across zero column x={m0} fails at {(m0 - i, j)}")
    return SymmetryReport(True)


def in_grid_zero_set(v: KernelVector) -> bool:
    """True when ``v`` vanishes on every grid point."""
    grid_pts = decomposition(v.m, v.n).grid_points
    return not any(p in grid_pts for p in v.values)


def matrix_for(polarity: str) -> str:
    return BLACK_TO_WHITE if polarity == BLACK else WHITE_TO_BLACK
