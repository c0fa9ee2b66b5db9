"""Invariant sweeps shared by the ``verify`` command."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .exact_arith import GF2, TEST_FIELDS, FieldSpec
from .grid import BLACK, WHITE, adjacency_matrix, build_grid, decomposition
from .kernel import (
    check_symmetries,
    in_grid_zero_set,
    is_kernel_vector,
    kernel_dimensions,
    matrix_for,
    oracle_nullspace,
    restrict_to_square,
    structured_basis,
    vectors_rank,
    violations,
)
from .tiling import active_adjacency, crossing_pairs, kernel_elements, lift, phi, phi_inverse
from .tiling.audit import audit_tiling


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def _unit_entries(v) -> bool:
    f = v.field
    return all(f.signed(x) in (1, -1) for x in v.values.values())


def check_kernel_cell(m: int, n: int, field: FieldSpec) -> list[CheckResult]:
    g = build_grid(m, n)
    dims = kernel_dimensions(m, n)
    dec = decomposition(m, n)
    out = []
    for k, pol in enumerate((BLACK, WHITE)):
        tag = f"{m}x{n} {field} {pol}"
        ns = oracle_nullspace(adjacency_matrix(g, matrix_for(pol)), field)
        out.append(CheckResult(f"oracle dimension {tag}", len(ns) == dims[k],
                               f"oracle {len(ns)} vs formula {dims[k]}"))
        out.append(CheckResult(f"oracle vanishes on grid {tag}", all(in_grid_zero_set(v) for v in ns)))
        basis = structured_basis(m, n, pol, field)
        problems = []
        for i, v in enumerate(basis):
            if not _unit_entries(v):
                problems.append(f"vector {i} has entries outside 0, 1, -1")
            if not is_kernel_vector(v):
                problems.append(f"vector {i} is not in the kernel")
            if not in_grid_zero_set(v):
                problems.append(f"vector {i} is nonzero on the grid")
            rep = check_symmetries(v)
            if not rep:
                problems.append(f"vector {i}: {rep.message}")
            for corner in dec.squares:
                if not is_kernel_vector(restrict_to_square(v, corner, dec.c)):
                    problems.append(f"vector {i} restricted to square {corner} leaves the square kernel")
                    break
        rank = vectors_rank(basis)
        if len(basis) != dims[k] or rank != dims[k]:
            problems.append(f"basis size {len(basis)}, rank {rank}, expected {dims[k]}")
        out.append(CheckResult(f"structured basis {tag}", not problems, "; ".join(problems[:3])))
    return out


def check_tiling_cell(m: int, n: int, max_dim: int = 20) -> list[CheckResult]:
    dims = kernel_dimensions(m, n)
    out = []
    for k, pol in enumerate((BLACK, WHITE)):
        tag = f"{m}x{n} {pol}"
        problems: list[str] = []
        seen = set()
        count = 0
        for u in kernel_elements(m, n, pol, max_dim):
            count += 1
            try:
                t = phi(u)
            except ValueError as exc:
                problems.append(f"phi failed: {exc}")
                continue
            if phi_inverse(t, check=False) != u:
                problems.append("phi_inverse(phi(u)) != u")
            if t.chunks in seen:
                problems.append("two vectors share a tiling")
            seen.add(t.chunks)
            problems.extend(audit_tiling(t))
            if crossing_pairs(active_adjacency(u)):
                problems.append("crossing segments")
            for field in TEST_FIELDS[1:]:
                try:
                    v = lift(u, field).vector
                except ValueError as exc:
                    problems.append(f"lift failed: {exc}")
                    break
                if violations(v) or v.to_field(GF2) != u:
                    problems.append(f"lift over {field} is not a kernel vector reducing to u")
        expected = 2 ** dims[k] - 1
        if count != expected:
            problems.append(f"{count} tilings, expected {expected}")
        out.append(CheckResult(f"tilings {tag} ({count})", not problems, "; ".join(problems[:3])))
    return out


def check_cell(m: int, n: int, fields: Sequence[FieldSpec] = TEST_FIELDS,
               tilings: bool = True, max_dim: int = 20) -> list[CheckResult]:
    out = []
    for f in fields:
        out.extend(check_kernel_cell(m, n, f))
    if tilings and m >= 2 and n >= 2:
        out.extend(check_tiling_cell(m, n, max_dim))
    return out


def square_identity(max_c: int = 15, fields: Iterable[FieldSpec] = TEST_FIELDS) -> list[CheckResult]:
    out = []
    for f in fields:
        bad = []
        for c in range(1, max_c + 1):
            g = build_grid(c, c)
            db = len(oracle_nullspace(adjacency_matrix(g, matrix_for(BLACK)), f))
            dw = len(oracle_nullspace(adjacency_matrix(g, matrix_for(WHITE)), f))
            if 2 * db != c + c % 2 or 2 * dw != c - c % 2:
                bad.append(f"c={c}: ({db}, {dw})")
        out.append(CheckResult(f"square dimension identity c<= {max_c} {f}", not bad, ", ".join(bad)))
    return out


def sweep(max_m: int, fields: Sequence[FieldSpec] = TEST_FIELDS, tiling_max: int = 16,
          max_dim: int = 20) -> Iterator[CheckResult]:
    """Every cell ``1 <= n <= m <= max_m``; tiling checks up to ``tiling_max``."""
    for m in range(1, max_m + 1):
        for n in range(1, m + 1):
            yield from check_cell(m, n, fields, tilings=m <= tiling_max, max_dim=max_dim)
    yield from square_identity(min(15, max_m), fields)
