"""Classification of raw faces into the six tile types."""
from __future__ import annotations

from dataclasses import dataclass

from ..grid import Point
from .active import direction
from .faces import RawPolygon, TilingError, doubled_area

TRIANGLE = "triangle"
AXIS_SQUARE = "axis_square"
TILTED_SQUARE = "tilted_square"
TRAPEZOID = "trapezoid"
HEXAGON = "hexagon"
OCTAGON = "octagon"
TILE_TYPES = (TRIANGLE, AXIS_SQUARE, TILTED_SQUARE, TRAPEZOID, HEXAGON, OCTAGON)

# Interior angles are stored in units of pi/4.
ACUTE, RIGHT, OBTUSE = 1, 2, 3


@dataclass(frozen=True, order=True)
class Chunk:
    """A classified tile.  Vertices run counterclockwise from the
    lexicographically smallest one; side ``i`` joins vertex ``i`` to ``i + 1``."""

    vertices: tuple[Point, ...]
    inactive_sides: tuple[int, ...]
    tile: str

    @property
    def side_active(self) -> tuple[bool, ...]:
        return tuple(i not in self.inactive_sides for i in range(len(self.vertices)))

    def sides(self) -> list[tuple[Point, Point]]:
        k = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)]

    @property
    def angles(self) -> tuple[int, ...]:
        return _angles(self.vertices)

    @property
    def doubled_area(self) -> int:
        return doubled_area(self.vertices)

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "tile": self.tile,
            "inactive_sides": list(self.inactive_sides),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Chunk":
        return cls(tuple((int(x), int(y)) for x, y in data["vertices"]),
                   tuple(sorted(int(i) for i in data["inactive_sides"])), data["tile"])


def _angles(vertices) -> tuple[int, ...]:
    k = len(vertices)
    dirs = [direction(vertices[i], vertices[(i + 1) % k]) for i in range(k)]
    return tuple(4 - (dirs[i] - dirs[i - 1]) % 8 for i in range(k))


def canonical_rotation(vertices, side_active):
    k = len(vertices)
    s = min(range(k), key=lambda i: vertices[i])
    return (tuple(vertices[(s + i) % k] for i in range(k)),
            tuple(side_active[(s + i) % k] for i in range(k)))


def _length(p: Point, q: Point) -> int:
    """Side length in lattice steps (units of sqrt 2 for diagonal sides)."""
    return max(abs(q[0] - p[0]), abs(q[1] - p[1]))


def _is_axis(p: Point, q: Point) -> bool:
    return p[0] == q[0] or p[1] == q[1]


def classify_chunk(poly: RawPolygon, m: int, n: int) -> Chunk:
    """Validate a face of the subdivision of R = [0, m-1] x [0, n-1] and name its tile."""
    verts, active = canonical_rotation(poly.vertices, poly.side_active)
    k = len(verts)
    where = f"chunk {list(verts)}"
    if k == 5:
        raise TilingError(f"{where} is a pentagon", "no-pentagon")
    if k == 7:
        raise TilingError(f"{where} is a heptagon", "no-heptagon")
    if k < 3 or k > 8:
        raise TilingError(f"{where} has {k} sides", "side-count")

    dirs = [direction(verts[i], verts[(i + 1) % k]) for i in range(k)]
    turns = [(dirs[i] - dirs[i - 1]) % 8 for i in range(k)]
    if any(t not in (1, 2, 3) for t in turns):
        raise TilingError(f"{where} is not strictly convex", "convexity")
    angles = [4 - t for t in turns]
    sides = [(verts[i], verts[(i + 1) % k]) for i in range(k)]
    axis = [_is_axis(p, q) for p, q in sides]
    length = [_length(p, q) for p, q in sides]

    def on_boundary_line(p: Point, q: Point) -> bool:
        return ((p[0] == q[0] and p[0] in (0, m - 1))
                or (p[1] == q[1] and p[1] in (0, n - 1)))

    for i, (p, q) in enumerate(sides):
        if not active[i] and not on_boundary_line(p, q):
            raise TilingError(f"inactive side {p}-{q} of {where} is off the boundary", "inactive-on-boundary")
        if active[i] and axis[i] and length[i] != 2:
            raise TilingError(f"active side {p}-{q} of {where} has length {length[i]}", "axis-side-length-2")

    # Angle i sits between side i-1 (incoming) and side i (outgoing).
    for i, a in enumerate(angles):
        mixed = active[i - 1] != active[i]
        if a == ACUTE and not mixed:
            raise TilingError(f"pi/4 angle at {verts[i]} of {where} is not mixed", "acute-angles-mixed")
        if a == OBTUSE and mixed:
            raise TilingError(f"3pi/4 angle at {verts[i]} of {where} is mixed", "obtuse-angles-unmixed")
        if a == RIGHT and mixed:
            raise TilingError(f"right angle at {verts[i]} of {where} is mixed", "right-angles-unmixed")
    if angles.count(ACUTE) % 2:
        raise TilingError(f"{where} has an odd number of pi/4 angles", "even-acute-angles")

    axis_square = k == 4 and all(axis) and all(active) and all(x == 2 for x in length)
    tilted_square = k == 4 and not any(axis) and all(active) and all(x == 1 for x in length)
    for i, a in enumerate(angles):
        if a == RIGHT and not axis[i] and not tilted_square:
            raise TilingError(f"diagonal right angle at {verts[i]} outside a unit tilted square",
                              "diagonal-right-angle")
        nxt = (i + 1) % k
        if a == RIGHT and angles[nxt] == RIGHT and axis[i] and active[i] and not axis_square:
            raise TilingError(f"consecutive right angles on side {sides[i]} of {where}",
                              "consecutive-right-angles")

    inactive = tuple(i for i in range(k) if not active[i])
    if k == 3:
        r = angles.index(RIGHT) if sorted(angles) == [ACUTE, ACUTE, RIGHT] else None
        if r is None:
            raise TilingError(f"{where} is not a right isosceles triangle", "triangle-shape")
        corner = verts[r]
        if corner[0] not in (0, m - 1) or corner[1] not in (0, n - 1):
            raise TilingError(f"right angle of {where} is not at a corner of R", "triangle-shape")
        tile = TRIANGLE
    elif k == 4:
        if axis_square:
            tile = AXIS_SQUARE
        elif tilted_square:
            tile = TILTED_SQUARE
        elif sorted(angles) == [ACUTE, ACUTE, OBTUSE, OBTUSE]:
            base = next((i for i in range(k) if angles[i] == ACUTE and angles[(i + 1) % k] == ACUTE), None)
            if base is None or inactive != (base,) or not axis[base]:
                raise TilingError(f"{where} is not a trapezoid with an inactive long base", "trapezoid-shape")
            tile = TRAPEZOID
        else:
            raise TilingError(f"{where} has angles {angles} outside the catalog", "quadrilateral-shape")
    elif k == 6:
        if sorted(angles) != [RIGHT, RIGHT, OBTUSE, OBTUSE, OBTUSE, OBTUSE] or inactive:
            raise TilingError(f"{where} has angles {angles} outside the catalog", "hexagon-shape")
        tile = HEXAGON
    else:
        if any(a != OBTUSE for a in angles) or inactive:
            raise TilingError(f"{where} has angles {angles} outside the catalog", "octagon-shape")
        tile = OCTAGON
    return Chunk(verts, inactive, tile)
