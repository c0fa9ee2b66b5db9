"""Active points of a GF(2) kernel vector and the segments joining them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product

from ..grid import GridGraph, Point, opposite
from ..kernel import KernelVector

# Direction i points at angle i * pi/4.
DIRECTIONS = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))
_DIR_INDEX = {d: i for i, d in enumerate(DIRECTIONS)}


class MalformedVectorError(ValueError):
    """The input is not a nonzero polarized GF(2) kernel vector."""

    def __init__(self, message: str, rule: str = ""):
        super().__init__(f"{rule}: {message}" if rule else message)
        self.rule = rule


def _sign(a: int) -> int:
    return (a > 0) - (a < 0)


def direction(p: Point, q: Point) -> int:
    """Index into DIRECTIONS of the ray from p to q (axis or diagonal only)."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    if dx and dy and abs(dx) != abs(dy):
        raise ValueError(f"segment {p}-{q} is neither axis-parallel nor diagonal")
    return _DIR_INDEX[(_sign(dx), _sign(dy))]


def _edge(p: Point, q: Point) -> tuple[Point, Point]:
    return (p, q) if p < q else (q, p)


@dataclass(frozen=True)
class ActiveGraph:
    m: int
    n: int
    color: str
    points: frozenset
    edges: frozenset

    @cached_property
    def adjacency(self) -> dict[Point, list[Point]]:
        adj: dict[Point, list[Point]] = {p: [] for p in self.points}
        for p, q in self.edges:
            adj[p].append(q)
            adj[q].append(p)
        for nbrs in adj.values():
            nbrs.sort()
        return adj

    def degree(self, p: Point) -> int:
        return len(self.adjacency[p])

    @staticmethod
    def is_diagonal(edge) -> bool:
        (x0, y0), (x1, y1) = edge
        return abs(x1 - x0) == 1

    def diagonal_edges(self) -> list:
        return sorted(e for e in self.edges if self.is_diagonal(e))

    def straight_edges(self) -> list:
        return sorted(e for e in self.edges if not self.is_diagonal(e))


def active_set(u: KernelVector) -> frozenset:
    if u.field.p != 2:
        raise MalformedVectorError(f"active points need a GF(2) vector, got {u.field}")
    return u.support()


def _edges_at(g: GridGraph, active, w: Point) -> list[tuple[Point, Point]]:
    """Pairs of active neighbors of ``w`` that the relation joins."""
    act = [q for q in g.neighbors(w) if q in active]
    out = []
    for a, b in combinations(act, 2):
        collinear = a[0] == b[0] or a[1] == b[1]
        if not collinear or len(act) == 2:
            out.append(_edge(a, b))
    return out


def active_adjacency(u: KernelVector) -> ActiveGraph:
    """Join active points sharing an opposite-color neighbor ``w`` when they
    make a right angle at ``w`` or are the only active neighbors of ``w``."""
    active = active_set(u)
    g = u.graph
    edges = set()
    for w in g.colored(opposite(u.polarity)):
        edges.update(_edges_at(g, active, w))
    return ActiveGraph(g.m, g.n, u.polarity, active, frozenset(edges))


# -- star catalog -------------------------------------------------------------

_PATCH = [(dx, dy) for dx in range(-2, 3) for dy in range(-2, 3)
          if (dx, dy) != (0, 0) and abs(dx) + abs(dy) <= 2 and (dx + dy) % 2 == 0]

_D4 = (
    lambda x, y: (x, y), lambda x, y: (-y, x), lambda x, y: (-x, -y), lambda x, y: (y, -x),
    lambda x, y: (x, -y), lambda x, y: (y, x), lambda x, y: (-x, y), lambda x, y: (-y, -x),
)


def star_shape(offsets) -> tuple:
    """Canonical form of a star's offset set up to rotation and reflection."""
    return min(tuple(sorted(t(x, y) for x, y in offsets)) for t in _D4)


@lru_cache(maxsize=None)
def _local_catalog(inside: frozenset) -> frozenset:
    """Every star that a locally consistent assignment can produce.

    ``inside`` lists the offsets of the 5x5 patch around the center that lie
    in the graph.  Same-color points within distance 2 of the center range
    over all 0/1 assignments with the center active; an assignment survives
    when each opposite-color neighbor of the center sees an even number of
    active points.
    """
    free = [o for o in _PATCH if o in inside]
    steps = [s for s in ((1, 0), (0, 1), (-1, 0), (0, -1)) if s in inside]
    stars = set()
    for bits in product((0, 1), repeat=len(free)):
        active = {(0, 0)} | {o for o, b in zip(free, bits) if b}
        ok = True
        for sx, sy in steps:
            nbrs = [(sx + dx, sy + dy) for dx, dy in ((1, 0), (0, 1), (-1, 0), (0, -1))]
            if sum(1 for q in nbrs if q in inside and q in active) % 2:
                ok = False
                break
        if not ok:
            continue
        star = set()
        for sx, sy in steps:
            act = [q for q in ((sx + 1, sy), (sx, sy + 1), (sx - 1, sy), (sx, sy - 1))
                   if q in inside and q in active]
            for a, b in combinations(act, 2):
                if (0, 0) not in (a, b):
                    continue
                collinear = a[0] == b[0] or a[1] == b[1]
                if not collinear or len(act) == 2:
                    star.add(b if a == (0, 0) else a)
        stars.add(frozenset(star))
    return frozenset(stars)


def _patch_inside(m: int, n: int, b: Point) -> frozenset:
    x, y = b
    return frozenset((dx, dy) for dx in range(-2, 3) for dy in range(-2, 3)
                     if 0 <= x + dx < m and 0 <= y + dy < n)


def star_catalog(m: int, n: int, b: Point) -> frozenset:
    return _local_catalog(_patch_inside(m, n, b))


def interior_star_shapes() -> list[tuple]:
    """Distinct star shapes at a point whose 5x5 patch lies inside the graph."""
    full = frozenset((dx, dy) for dx in range(-2, 3) for dy in range(-2, 3))
    return sorted({star_shape(s) for s in _local_catalog(full) if s})


def classify_star(g: ActiveGraph, b: Point) -> tuple:
    """Canonical shape of the star at ``b``, validated against the catalog."""
    if b not in g.points:
        raise MalformedVectorError(f"{b} is not an active point")
    offsets = frozenset((q[0] - b[0], q[1] - b[1]) for q in g.adjacency[b])
    if offsets not in star_catalog(g.m, g.n, b):
        raise MalformedVectorError(
            f"star at {b} with offsets {sorted(offsets)} is not in the local catalog", "star")
    return star_shape(offsets)


# -- structural checks ----------------------------------------------------------

def _segments_cross(e1, e2) -> bool:
    """Exact test for two segments meeting anywhere (endpoints included)."""
    (p1, p2), (p3, p4) = e1, e2

    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return _sign(v)

    def on_seg(a, b, c):
        return min(a[0], b[0]) <= c[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= c[1] <= max(a[1], b[1])

    o1, o2, o3, o4 = orient(p1, p2, p3), orient(p1, p2, p4), orient(p3, p4, p1), orient(p3, p4, p2)
    if o1 != o2 and o3 != o4:
        return True
    return ((o1 == 0 and on_seg(p1, p2, p3)) or (o2 == 0 and on_seg(p1, p2, p4))
            or (o3 == 0 and on_seg(p3, p4, p1)) or (o4 == 0 and on_seg(p3, p4, p2)))


def crossing_pairs(g: ActiveGraph) -> list:
    """Pairs of edges with four distinct endpoints that meet."""
    buckets: dict[tuple[int, int], list] = {}
    for e in g.edges:
        (x0, y0), (x1, y1) = e
        for cx in range(min(x0, x1), max(x0, x1) + 1):
            for cy in range(min(y0, y1), max(y0, y1) + 1):
                buckets.setdefault((cx, cy), []).append(e)
    found = set()
    for es in buckets.values():
        for e1, e2 in combinations(es, 2):
            if len({*e1, *e2}) < 4:
                continue
            if _segments_cross(e1, e2):
                found.add(tuple(sorted((e1, e2))))
    return sorted(found)


def validate_active_graph(g: ActiveGraph) -> None:
    """Check planarity, degrees and stars; raise on the first failure."""
    corners = {(0, 0), (g.m - 1, 0), (0, g.n - 1), (g.m - 1, g.n - 1)}
    for p in sorted(g.points):
        if p not in corners and g.degree(p) < 2:
            raise MalformedVectorError(f"active point {p} has degree {g.degree(p)}", "degree")
    crossings = crossing_pairs(g)
    if crossings:
        raise MalformedVectorError(f"segments {crossings[0][0]} and {crossings[0][1]} cross", "planarity")
    for p in sorted(g.points):
        classify_star(g, p)
