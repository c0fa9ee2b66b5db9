"""The m x n rectangular graph, its chessboard coloring and adjacency matrices.

Points are ``(x, y)`` tuples with ``0 <= x < m`` and ``0 <= y < n``.  A point
is black when ``x + y`` is even.  Points of each color are numbered from 0 in
row-major order (``y`` ascending, then ``x``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterator, Tuple

Point = Tuple[int, int]

BLACK = "black"
WHITE = "white"
BLACK_TO_WHITE = "black_to_white"
WHITE_TO_BLACK = "white_to_black"

_STEPS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def color_of(p: Point) -> str:
    return BLACK if (p[0] + p[1]) % 2 == 0 else WHITE


def opposite(color: str) -> str:
    if color == BLACK:
        return WHITE
    if color == WHITE:
        return BLACK
    raise ValueError(f"unknown color {color!r}")


@dataclass(frozen=True)
class GridGraph:
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise TypeError("grid dimensions must be integers")
        if self.m < 1 or self.n < 1:
            raise ValueError(f"grid dimensions must be positive, got {self.m}x{self.n}")

    def __contains__(self, p) -> bool:
        x, y = p
        return 0 <= x < self.m and 0 <= y < self.n

    def points(self) -> Iterator[Point]:
        for y in range(self.n):
            for x in range(self.m):
                yield (x, y)

    @cached_property
    def black_points(self) -> tuple[Point, ...]:
        return tuple(p for p in self.points() if (p[0] + p[1]) % 2 == 0)

    @cached_property
    def white_points(self) -> tuple[Point, ...]:
        return tuple(p for p in self.points() if (p[0] + p[1]) % 2 == 1)

    @cached_property
    def black_index(self) -> dict[Point, int]:
        return {p: i for i, p in enumerate(self.black_points)}

    @cached_property
    def white_index(self) -> dict[Point, int]:
        return {p: i for i, p in enumerate(self.white_points)}

    @property
    def n_black(self) -> int:
        return len(self.black_points)

    @property
    def n_white(self) -> int:
        return len(self.white_points)

    def colored(self, color: str) -> tuple[Point, ...]:
        return self.black_points if color == BLACK else self.white_points

    def index(self, color: str) -> dict[Point, int]:
        return self.black_index if color == BLACK else self.white_index

    def neighbors(self, p: Point) -> list[Point]:
        x, y = p
        out = []
        for dx, dy in _STEPS:
            q = (x + dx, y + dy)
            if 0 <= q[0] < self.m and 0 <= q[1] < self.n:
                out.append(q)
        return out

    def is_corner(self, p: Point) -> bool:
        return p[0] in (0, self.m - 1) and p[1] in (0, self.n - 1)

    def on_boundary(self, p: Point) -> bool:
        return p[0] in (0, self.m - 1) or p[1] in (0, self.n - 1)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n}

    @classmethod
    def from_json(cls, data: dict) -> "GridGraph":
        return cls(int(data["m"]), int(data["n"]))


def build_grid(m: int, n: int) -> GridGraph:
    return GridGraph(m, n)


@dataclass(frozen=True)
class BipartiteMatrix:
    """A 0/1 matrix between the two color classes of a grid.

    ``black_to_white`` has one row per white point and one column per black
    point; ``white_to_black`` is its transpose.
    """

    m: int
    n: int
    direction: str
    rows: int
    cols: int
    entries: frozenset = field(repr=False)

    @property
    def column_color(self) -> str:
        return BLACK if self.direction == BLACK_TO_WHITE else WHITE

    @property
    def row_color(self) -> str:
        return opposite(self.column_color)

    def row_supports(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.rows)]
        for r, c in self.entries:
            out[r].append(c)
        for row in out:
            row.sort()
        return out

    def transpose(self) -> "BipartiteMatrix":
        flipped = WHITE_TO_BLACK if self.direction == BLACK_TO_WHITE else BLACK_TO_WHITE
        return BipartiteMatrix(
            self.m, self.n, flipped, self.cols, self.rows,
            frozenset((c, r) for r, c in self.entries),
        )

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for r, c in self.entries:
            dense[r][c] = 1
        return dense

    def to_dense_text(self) -> str:
        return "\n".join("".join(str(v) for v in row) for row in self.to_dense())

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "direction": self.direction,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[r, c, 1] for r, c in sorted(self.entries)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BipartiteMatrix":
        return cls(
            data["m"], data["n"], data["direction"], data["rows"], data["cols"],
            frozenset((r, c) for r, c, v in data["entries"] if v),
        )


def adjacency_matrix(g: GridGraph, direction: str = BLACK_TO_WHITE) -> BipartiteMatrix:
    """Entry ``(w, b)`` is 1 iff black point ``b`` neighbors white point ``w``."""
    if direction not in (BLACK_TO_WHITE, WHITE_TO_BLACK):
        raise ValueError(f"unknown direction {direction!r}")
    b_idx = g.black_index
    entries = set()
    for wi, w in enumerate(g.white_points):
        for q in g.neighbors(w):
            entries.add((wi, b_idx[q]))
    bw = BipartiteMatrix(g.m, g.n, BLACK_TO_WHITE, g.n_white, g.n_black, frozenset(entries))
    return bw if direction == BLACK_TO_WHITE else bw.transpose()


def grid_parameter(m: int, n: int) -> int:
    return gcd(m + 1, n + 1) - 1


@dataclass(frozen=True)
class GridDecomposition:
    m: int
    n: int
    c: int
    grid_points: frozenset
    squares: tuple[Point, ...]

    @property
    def vertical_lines(self) -> tuple[int, ...]:
        return _lines(self.m, self.c)

    @property
    def horizontal_lines(self) -> tuple[int, ...]:
        return _lines(self.n, self.c)

    def square_points(self, corner: Point) -> list[Point]:
        x0, y0 = corner
        return [(x0 + i, y0 + j) for j in range(self.c) for i in range(self.c)]


def _lines(size: int, c: int) -> tuple[int, ...]:
    return tuple(range(c, size, c + 1))


def decomposition(m: int, n: int) -> GridDecomposition:
    """Zero lines ``x, y = k(c+1) - 1`` and the c x c squares they frame."""
    g = GridGraph(m, n)
    c = grid_parameter(m, n)
    xs = set(_lines(m, c))
    ys = set(_lines(n, c))
    grid_pts = frozenset(p for p in g.points() if p[0] in xs or p[1] in ys)
    squares: tuple[Point, ...] = ()
    if c > 0:
        squares = tuple(
            (x0, y0)
            for y0 in range(0, n, c + 1)
            for x0 in range(0, m, c + 1)
        )
    return GridDecomposition(m, n, c, grid_pts, squares)
