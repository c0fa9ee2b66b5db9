"""Faces of the planar subdivision cut out by active segments and the boundary of R."""
from __future__ import annotations

from dataclasses import dataclass

from ..grid import Point
from .active import ActiveGraph, direction


class TilingError(ValueError):
    """A chunk or tiling breaks one of the structural rules.

    ``rule`` names the rule, e.g. ``"no-mixed-sides"`` or ``"no-pentagon"``.
    """

    def __init__(self, message: str, rule: str):
        super().__init__(f"{rule}: {message}")
        self.rule = rule


@dataclass(frozen=True)
class RawPolygon:
    """A bounded face: counterclockwise corners and per-side activity.

    Side ``i`` runs from ``vertices[i]`` to ``vertices[i + 1]``.
    """

    vertices: tuple[Point, ...]
    side_active: tuple[bool, ...]


def perimeter_position(m: int, n: int, p: Point) -> int:
    """Counterclockwise arc length from the origin along the boundary of R."""
    x, y = p
    w, h = m - 1, n - 1
    if y == 0:
        return x
    if x == w:
        return w + y
    if y == h:
        return w + h + (w - x)
    return 2 * w + h + (h - y)


def subdivision_edges(g: ActiveGraph) -> dict[tuple[Point, Point], bool]:
    """Undirected edges of the subdivision mapped to their activity flag."""
    m, n = g.m, g.n
    if m < 2 or n < 2:
        raise TilingError(f"R is degenerate for a {m}x{n} graph", "degenerate-rectangle")
    corners = {(0, 0), (m - 1, 0), (m - 1, n - 1), (0, n - 1)}
    on_boundary = sorted(
        {p for p in g.points if p[0] in (0, m - 1) or p[1] in (0, n - 1)} | corners,
        key=lambda p: perimeter_position(m, n, p),
    )
    edges: dict[tuple[Point, Point], bool] = {e: True for e in g.edges}
    pieces = set()
    for i, p in enumerate(on_boundary):
        q = on_boundary[(i + 1) % len(on_boundary)]
        e = (p, q) if p < q else (q, p)
        pieces.add(e)
        edges.setdefault(e, False)
    for e in g.edges:
        (x0, y0), (x1, y1) = e
        along = (x0 == x1 and x0 in (0, m - 1)) or (y0 == y1 and y0 in (0, n - 1))
        if along and e not in pieces:
            raise TilingError(f"boundary segment {e} skips a boundary vertex", "boundary-overlap")
    return edges


def _faces(edges: dict) -> list[tuple[list[Point], list[bool]]]:
    out: dict[Point, list[tuple[int, Point]]] = {}
    for p, q in edges:
        out.setdefault(p, []).append((direction(p, q), q))
        out.setdefault(q, []).append((direction(q, p), p))
    for lst in out.values():
        lst.sort()

    def next_half(u: Point, v: Point) -> Point:
        back = direction(v, u)
        lst = out[v]
        chosen = lst[-1][1]
        for d, w in lst:
            if d < back:
                chosen = w
        return chosen

    seen = set()
    faces = []
    for start in sorted((p, q) for p in out for _d, q in out[p]):
        if start in seen:
            continue
        verts, flags = [], []
        u, v = start
        while (u, v) not in seen:
            seen.add((u, v))
            verts.append(u)
            flags.append(edges[(u, v) if u < v else (v, u)])
            u, v = v, next_half(u, v)
        faces.append((verts, flags))
    return faces


def doubled_area(vertices) -> int:
    s = 0
    k = len(vertices)
    for i in range(k):
        (x0, y0), (x1, y1) = vertices[i], vertices[(i + 1) % k]
        s += x0 * y1 - x1 * y0
    return s


def _merge_collinear(verts: list[Point], flags: list[bool]) -> RawPolygon:
    k = len(verts)
    dirs = [direction(verts[i], verts[(i + 1) % k]) for i in range(k)]
    # Start at a vertex where the direction changes.
    start = next(i for i in range(k) if dirs[i] != dirs[i - 1])
    corners, sides = [], []
    for step in range(k):
        i = (start + step) % k
        if step and dirs[i] == dirs[i - 1]:
            if sides[-1] != flags[i]:
                raise TilingError(f"side through {verts[i]} is partly active", "no-mixed-sides")
            continue
        corners.append(verts[i])
        sides.append(flags[i])
    return RawPolygon(tuple(corners), tuple(sides))


def extract_chunks(g: ActiveGraph) -> list[RawPolygon]:
    """Bounded faces of the subdivision, collinear runs merged into sides."""
    edges = subdivision_edges(g)
    bounded, outer = [], 0
    for verts, flags in _faces(edges):
        area = doubled_area(verts)
        if area > 0:
            bounded.append(_merge_collinear(verts, flags))
        else:
            outer += 1
    if outer != 1:
        raise TilingError(f"found {outer} unbounded face cycles; segments are not all attached to the boundary",
                          "connected-segments")
    return bounded

