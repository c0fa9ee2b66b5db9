"""Exact sparse Gaussian elimination.

Rows are sparse: ``{column: payload}`` dicts for GF(p) and Q, or ``int``
bitmasks for GF(2).  Pivots are taken on the first nonzero column of each
incoming row, so no numerical pivoting is involved.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .exact_arith import FieldSpec, Payload


def bits_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask ^= 1 << i
    return mask


def indices_from_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class GF2Echelon:
    """Incremental row echelon form over GF(2) on packed bit rows."""

    def __init__(self):
        self.pivots: dict[int, int] = {}

    def reduce(self, row: int) -> int:
        while row:
            low = row & -row
            pivot_row = self.pivots.get(low)
            if pivot_row is None:
                return row
            row ^= pivot_row
        return 0

    def add(self, row: int) -> bool:
        row = self.reduce(row)
        if row:
            self.pivots[row & -row] = row
            return True
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nullspace(self, ncols: int) -> list[int]:
        """Basis of ``{x : row . x = 0 for all rows}`` as bitmasks."""
        reduced = _back_reduce_bits(self.pivots)
        pivot_cols = {low.bit_length() - 1: row for low, row in reduced.items()}
        basis = []
        for f in range(ncols):
            if f in pivot_cols:
                continue
            x = 1 << f
            for pc, row in pivot_cols.items():
                if row >> f & 1:
                    x |= 1 << pc
            basis.append(x)
        return basis


def _back_reduce_bits(pivots: dict[int, int]) -> dict[int, int]:
    rows = dict(pivots)
    for low in sorted(rows, reverse=True):
        prow = rows[low]
        for other in rows:
            if other != low and rows[other] & low:
                rows[other] ^= prow
    return rows


class Echelon:
    """Incremental row echelon form over GF(p) or Q on sparse dict rows.

    Stored pivot rows are normalized so the pivot entry is 1.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.pivots: dict[int, dict[int, Payload]] = {}

    def reduce(self, row: dict[int, Payload]) -> dict[int, Payload]:
        f = self.field
        row = {c: v for c, v in row.items() if v != 0}
        while row:
            lead = min(row)
            prow = self.pivots.get(lead)
            if prow is None:
                return row
            factor = row[lead]
            for c, v in prow.items():
                nv = f.sub(row.get(c, f.zero), f.mul(factor, v))
                if nv == 0:
                    row.pop(c, None)
                else:
                    row[c] = nv
        return row

    def add(self, row: dict[int, Payload]) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        f = self.field
        lead = min(row)
        scale = f.inv(row[lead])
        self.pivots[lead] = {c: f.mul(v, scale) for c, v in row.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nullspace(self, ncols: int) -> list[dict[int, Payload]]:
        f = self.field
        rows = {k: dict(v) for k, v in self.pivots.items()}
        for lead in sorted(rows, reverse=True):
            prow = rows[lead]
            for other, orow in rows.items():
                factor = orow.get(lead)
                if other == lead or not factor:
                    continue
                for c, v in prow.items():
                    nv = f.sub(orow.get(c, f.zero), f.mul(factor, v))
                    if nv == 0:
                        orow.pop(c, None)
                    else:
                        orow[c] = nv
        basis = []
        for free in range(ncols):
            if free in rows:
                continue
            x = {free: f.one}
            for lead, prow in rows.items():
                v = prow.get(free)
                if v:
                    x[lead] = f.neg(v)
            basis.append(x)
        return basis


def rank_of(rows: Sequence[dict[int, Payload]], field: FieldSpec) -> int:
    """Rank of a list of sparse rows over ``field``."""
    if field.p == 2:
        ech2 = GF2Echelon()
        for row in rows:
            ech2.add(bits_from_indices(c for c, v in row.items() if v % 2))
        return ech2.rank
    ech = Echelon(field)
    for row in rows:
        ech.add(row)
    return ech.rank
