"""Geometry audit of a finished tiling, independent of the classifier."""
from __future__ import annotations

from ..grid import color_of
from .bijection import Tiling


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def audit_tiling(t: Tiling) -> list[str]:
    """Return human-readable problems; an empty list means the tiling passes.

    Checks: chunk areas add up to the area of R, each chunk is strictly
    convex and counterclockwise with integral vertices, non-corner vertices
    share the tiling color, inactive sides lie on the boundary of R and no
    side is split between active and inactive parts, axis-parallel active
    sides have length 2, and every chunk has an even number of pi/4 angles.
    """
    m, n = t.m, t.n
    corners = {(0, 0), (m - 1, 0), (0, n - 1), (m - 1, n - 1)}
    problems = []
    total = 0
    for chunk in t.chunks:
        vs = chunk.vertices
        k = len(vs)
        name = f"{chunk.tile} {list(vs)}"
        if any(not (isinstance(x, int) and isinstance(y, int)) for x, y in vs):
            problems.append(f"{name}: non-integral vertex")
            continue
        if any(not (0 <= x <= m - 1 and 0 <= y <= n - 1) for x, y in vs):
            problems.append(f"{name}: vertex outside R")
        area2 = 0
        for i in range(k):
            (x0, y0), (x1, y1) = vs[i], vs[(i + 1) % k]
            area2 += x0 * y1 - x1 * y0
        total += area2
        for i in range(k):
            if _cross(vs[i - 1], vs[i], vs[(i + 1) % k]) <= 0:
                problems.append(f"{name}: not strictly convex at {vs[i]}")
        for v in vs:
            if v not in corners and color_of(v) != t.color:
                problems.append(f"{name}: vertex {v} is not {t.color}")
        for i, ((p, q), active) in enumerate(zip(chunk.sides(), chunk.side_active)):
            axis = p[0] == q[0] or p[1] == q[1]
            on_dR = (p[0] == q[0] and p[0] in (0, m - 1)) or (p[1] == q[1] and p[1] in (0, n - 1))
            if not active and not on_dR:
                problems.append(f"{name}: inactive side {i} leaves the boundary")
            if active and axis and max(abs(q[0] - p[0]), abs(q[1] - p[1])) != 2:
                problems.append(f"{name}: active axis side {i} does not have length 2")
        acute = 0
        for i in range(k):
            a, b, c = vs[i - 1], vs[i], vs[(i + 1) % k]
            u = (a[0] - b[0], a[1] - b[1])
            w = (c[0] - b[0], c[1] - b[1])
            dot = u[0] * w[0] + u[1] * w[1]
            # pi/4 exactly when cos^2 = 1/2 with positive cosine.
            if dot > 0 and 2 * dot * dot == (u[0] ** 2 + u[1] ** 2) * (w[0] ** 2 + w[1] ** 2):
                acute += 1
        if acute % 2:
            problems.append(f"{name}: odd number of pi/4 angles")
    if total != 2 * (m - 1) * (n - 1):
        problems.append(f"chunk areas sum to {total / 2}, expected {(m - 1) * (n - 1)}")
    return problems
