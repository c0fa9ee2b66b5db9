"""SVG and ASCII pictures of tilings.

ASCII glyphs: ``#`` point on an active side, ``.`` any other lattice point,
``-`` and ``|`` axis-parallel active segments, ``/`` and ``\\`` diagonal
active segments.  Inactive sides are not drawn.  The top row is ``y = n-1``.
"""
from __future__ import annotations

from typing import Iterable

from .grid import color_of
from .tiling.bijection import Tiling

UNIT = 32
MARGIN = 16
GAP = 24

FILL = {
    "triangle": "#f4d35e",
    "axis_square": "#90be6d",
    "tilted_square": "#43aa8b",
    "trapezoid": "#f9844a",
    "hexagon": "#577590",
    "octagon": "#c77dff",
}


def _size(t: Tiling) -> tuple[int, int]:
    return 2 * MARGIN + UNIT * (t.m - 1), 2 * MARGIN + UNIT * (t.n - 1)


def _tiling_elements(t: Tiling, dy: int = 0) -> list[str]:
    def X(x):
        return MARGIN + UNIT * x

    def Y(y):
        return dy + MARGIN + UNIT * (t.n - 1 - y)

    out = [f'<g class="tiling" data-color="{t.color}" data-m="{t.m}" data-n="{t.n}">']
    for chunk in t.chunks:
        d = " ".join(f"{'M' if i == 0 else 'L'}{X(x)},{Y(y)}" for i, (x, y) in enumerate(chunk.vertices))
        out.append(f'<path class="chunk {chunk.tile}" d="{d} Z" fill="{FILL[chunk.tile]}" stroke="none"/>')
    for chunk in t.chunks:
        for (p, q), active in zip(chunk.sides(), chunk.side_active):
            style = 'stroke="#000000" stroke-width="2"' if active else \
                'stroke="#555555" stroke-width="1" stroke-dasharray="4 4"'
            kind = "active" if active else "inactive"
            out.append(f'<line class="side {kind}" x1="{X(p[0])}" y1="{Y(p[1])}" '
                       f'x2="{X(q[0])}" y2="{Y(q[1])}" {style}/>')
    out.append("</g>")
    return out


def _document(width: int, height: int, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">')
    return "\n".join(['<?xml version="1.0" encoding="UTF-8"?>', head, *body, "</svg>"]) + "\n"


def render_svg(t: Tiling) -> str:
    """One filled closed path per chunk; sides drawn solid (active) or dashed."""
    w, h = _size(t)
    return _document(w, h, _tiling_elements(t))


def render_svg_sheet(tilings: Iterable[Tiling]) -> str:
    """Several tilings stacked top to bottom in one document."""
    body, width, height = [], 0, 0
    for i, t in enumerate(tilings):
        w, h = _size(t)
        if i:
            height += GAP
        body.extend(_tiling_elements(t, height))
        width, height = max(width, w), height + h
    return _document(width, height, body)


def render_ascii(t: Tiling) -> str:
    cols, rows = 2 * (t.m - 1) + 1, 2 * (t.n - 1) + 1
    canvas = [["." if c % 2 == 0 and r % 2 == 0 else " " for c in range(cols)] for r in range(rows)]

    def put(x2, y2, ch):
        canvas[rows - 1 - y2][x2] = ch

    for chunk in t.chunks:
        for (p, q), active in zip(chunk.sides(), chunk.side_active):
            if not active:
                continue
            steps = max(abs(q[0] - p[0]), abs(q[1] - p[1]))
            sx, sy = (q[0] - p[0]) // steps, (q[1] - p[1]) // steps
            if sx and sy:
                glyph = "/" if sx == sy else "\\"
            else:
                glyph = "-" if sy == 0 else "|"
            for k in range(steps):
                a = (p[0] + k * sx, p[1] + k * sy)
                put(2 * a[0] + sx, 2 * a[1] + sy, glyph)
                if k and color_of(a) != t.color:
                    put(2 * a[0], 2 * a[1], glyph)
            for k in range(steps + 1):
                a = (p[0] + k * sx, p[1] + k * sy)
                if color_of(a) == t.color:
                    put(2 * a[0], 2 * a[1], "#")
    return "\n".join("".join(row).rstrip() for row in canvas) + "\n"


def render_ascii_list(tilings: Iterable[Tiling]) -> str:
    blocks = []
    for i, t in enumerate(tilings, 1):
        tiles = ", ".join(f"{k} x{v}" for k, v in sorted(t.tile_counts().items()))
        blocks.append(f"[{i}] {t.color} tiling of {t.m}x{t.n}: {tiles}\n" + render_ascii(t))
    return "\n".join(blocks)
