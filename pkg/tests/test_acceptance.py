"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that ``conftest.py`` prints in the
terminal summary.  The module also runs standalone::

    python3 tests/test_acceptance.py
"""
import time
from math import gcd

from grid_harmonic.exact_arith import GF2, TEST_FIELDS
from grid_harmonic.grid import (
    BLACK, BLACK_TO_WHITE, WHITE, WHITE_TO_BLACK, adjacency_matrix, build_grid, color_of,
)
from grid_harmonic.kernel import (
    check_symmetries, in_grid_zero_set, kernel_dimensions, oracle_nullity, structured_basis,
    vectors_rank, violations,
)
from grid_harmonic.tiling import (
    TILE_TYPES, active_adjacency, add_tilings, enumerate_tilings, kernel_elements, lift, phi, phi_inverse,
)
from grid_harmonic.tiling.audit import audit_tiling

RESULTS: list[str] = []


def _record(number, title, problems, elapsed, limit=None):
    if limit is not None and elapsed >= limit:
        problems = problems + [f"took {elapsed:.1f}s, limit {limit}s"]
    ok = not problems
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.2f}s)"
    if problems:
        line += " :: " + "; ".join(problems[:3])
    RESULTS.append(line)
    print(line)
    return problems


def _cells(lo, hi):
    return [(m, n) for m in range(lo, hi + 1) for n in range(lo, m + 1)]


def _expected(c):
    return (c + 1) // 2, c // 2


def test_criterion_1_dimension_formula():
    start = time.perf_counter()
    problems = []
    for field in TEST_FIELDS:
        for m, n in _cells(1, 30):
            g = build_grid(m, n)
            got = (oracle_nullity(adjacency_matrix(g, BLACK_TO_WHITE), field),
                   oracle_nullity(adjacency_matrix(g, WHITE_TO_BLACK), field))
            if got != _expected(gcd(m + 1, n + 1) - 1):
                problems.append(f"{m}x{n} over {field}: oracle {got}")
    assert not _record(1, "oracle dimensions match the gcd formula, n<=m<=30, 5 fields",
                       problems, time.perf_counter() - start, limit=60)


def test_criterion_2_structured_bases():
    start = time.perf_counter()
    problems = []
    for field in TEST_FIELDS:
        for m, n in _cells(1, 30):
            dims = kernel_dimensions(m, n)
            for k, pol in enumerate((BLACK, WHITE)):
                basis = structured_basis(m, n, pol, field)
                if len(basis) != dims[k] or vectors_rank(basis) != dims[k]:
                    problems.append(f"{m}x{n} {pol} {field}: rank {vectors_rank(basis)} of {len(basis)}")
                for v in basis:
                    if any(field.signed(x) not in (1, -1) for x in v.values.values()):
                        problems.append(f"{m}x{n} {pol} {field}: entry outside 0, 1, -1")
                    if violations(v):
                        problems.append(f"{m}x{n} {pol} {field}: nonzero neighbor sum")
                    if not in_grid_zero_set(v):
                        problems.append(f"{m}x{n} {pol} {field}: nonzero on the grid")
                    if not check_symmetries(v):
                        problems.append(f"{m}x{n} {pol} {field}: symmetry violated")
    assert not _record(2, "structured bases are full-rank {0,1,-1} kernel bases",
                       problems, time.perf_counter() - start)


def test_criterion_3_square_identity():
    start = time.perf_counter()
    problems = []
    for field in TEST_FIELDS:
        for c in range(1, 16):
            g = build_grid(c, c)
            db = oracle_nullity(adjacency_matrix(g, BLACK_TO_WHITE), field)
            dw = oracle_nullity(adjacency_matrix(g, WHITE_TO_BLACK), field)
            if 2 * db != c + c % 2 or 2 * dw != c - c % 2:
                problems.append(f"c={c} over {field}: ({db}, {dw})")
    assert not _record(3, "square identity for 1<=c<=15", problems, time.perf_counter() - start)


def test_criterion_4_eleven_by_five():
    start = time.perf_counter()
    problems = []
    black, white = enumerate_tilings(11, 5)
    if (len(black), len(white)) != (7, 3):
        problems.append(f"{len(black)} black and {len(white)} white tilings")
    for t in black + white:
        if audit_tiling(t) or phi(phi_inverse(t)) != t:
            problems.append("invalid tiling")
    if len(white) == 3:
        a, b, third = white
        if add_tilings(a, b) != third:
            problems.append("A + B is not the third white tiling")
    assert not _record(4, "11x5 graph has 7 black + 3 white tilings, A + B = third",
                       problems, time.perf_counter() - start, limit=1)


def test_criterion_5_bijection():
    start = time.perf_counter()
    problems = []
    for m, n in _cells(2, 16):
        dims = kernel_dimensions(m, n)
        for k, pol in enumerate((BLACK, WHITE)):
            seen = set()
            count = 0
            for u in kernel_elements(m, n, pol):
                count += 1
                t = phi(u)
                if phi_inverse(t) != u:
                    problems.append(f"{m}x{n} {pol}: roundtrip failed")
                if t.chunks in seen:
                    problems.append(f"{m}x{n} {pol}: phi not injective")
                seen.add(t.chunks)
                if any(c.tile not in TILE_TYPES for c in t.chunks):
                    problems.append(f"{m}x{n} {pol}: unknown tile")
            if count != 2 ** dims[k] - 1:
                problems.append(f"{m}x{n} {pol}: {count} tilings, expected {2 ** dims[k] - 1}")
    assert not _record(5, "phi is a bijection onto tilings, 2<=n<=m<=16",
                       problems, time.perf_counter() - start, limit=120)


def _odd_cycle_free(g):
    side = {}
    for root in g.points:
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            p = stack.pop()
            for q in g.adjacency[p]:
                if q not in side:
                    side[q] = 1 - side[p]
                    stack.append(q)
                elif side[q] == side[p]:
                    return False
    return True


def test_criterion_6_lifting():
    start = time.perf_counter()
    problems = []
    for m, n in _cells(2, 16):
        for pol in (BLACK, WHITE):
            for u in kernel_elements(m, n, pol):
                if not _odd_cycle_free(active_adjacency(u)):
                    problems.append(f"{m}x{n} {pol}: odd cycle")
                for field in TEST_FIELDS[1:]:
                    v = lift(u, field).vector
                    if any(field.signed(x) not in (1, -1) for x in v.values.values()):
                        problems.append(f"{m}x{n} {pol} {field}: entry outside 0, 1, -1")
                    if v.to_field(GF2) != u:
                        problems.append(f"{m}x{n} {pol} {field}: does not reduce to u")
                    if violations(v):
                        problems.append(f"{m}x{n} {pol} {field}: not a kernel vector")
    assert not _record(6, "lifts are signed kernel vectors over Q, GF3, GF5, GF7",
                       problems, time.perf_counter() - start)


def _lattice_points(p, q):
    steps = max(abs(q[0] - p[0]), abs(q[1] - p[1]))
    dx, dy = (q[0] - p[0]) // steps, (q[1] - p[1]) // steps
    return [(p[0] + k * dx, p[1] + k * dy) for k in range(steps + 1)]


def _mixed_sides(t, g):
    """Sides that are neither fully covered by active edges nor free of them."""
    edges = {frozenset(e) for e in g.edges}
    bad = []
    for chunk in t.chunks:
        for (p, q), active in zip(chunk.sides(), chunk.side_active):
            pts = [r for r in _lattice_points(p, q) if color_of(r) == t.color]
            covered = [frozenset((a, b)) in edges for a, b in zip(pts, pts[1:])]
            if active:
                ok = color_of(p) == color_of(q) == t.color and all(covered)
            else:
                ok = not any(covered) and not any(r in g.points for r in pts if r not in (p, q))
            if not ok:
                bad.append((p, q))
    return bad


def test_criterion_7_geometry():
    start = time.perf_counter()
    problems = []
    for m, n in _cells(2, 16):
        for pol in (BLACK, WHITE):
            for u in kernel_elements(m, n, pol):
                t = phi(u)
                for issue in audit_tiling(t):
                    problems.append(f"{m}x{n} {pol}: {issue}")
                for side in _mixed_sides(t, active_adjacency(u)):
                    problems.append(f"{m}x{n} {pol}: mixed side {side}")
    assert not _record(7, "geometry audit of every tiling, 2<=n<=m<=16",
                       problems, time.perf_counter() - start)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
