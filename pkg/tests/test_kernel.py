from fractions import Fraction
from itertools import product

import pytest
import sympy

from grid_harmonic.exact_arith import GF2, GF3, GF5, GF7, QQ, TEST_FIELDS
from grid_harmonic.grid import (
    BLACK, BLACK_TO_WHITE, WHITE, WHITE_TO_BLACK, adjacency_matrix, build_grid, decomposition,
)
from grid_harmonic.kernel import (
    KernelError,
    KernelVector,
    check_symmetries,
    in_grid_zero_set,
    is_kernel_vector,
    kernel_dimensions,
    matrix_for,
    neighbor_sum,
    odd_extend,
    oracle_nullspace,
    restrict_to_square,
    square_kernel_from_seed,
    structured_basis,
    vectors_rank,
)


def brute_force_kernel_size(m, n, polarity, p):
    """Count solutions by enumerating every vector on the support color."""
    g = build_grid(m, n)
    pts = g.colored(polarity)
    others = [q for q in g.points() if q not in set(pts)]
    count = 0
    for values in product(range(p), repeat=len(pts)):
        val = dict(zip(pts, values))
        if all(sum(val.get(q, 0) for q in g.neighbors(w)) % p == 0 for w in others):
            count += 1
    return count


SMALL = [(m, n) for m in range(1, 6) for n in range(1, m + 1)] + [(7, 1), (5, 3), (6, 2), (7, 3)]


@pytest.mark.parametrize("m, n", SMALL)
@pytest.mark.parametrize("p", [2, 3])
def test_oracle_matches_brute_force(m, n, p):
    field = GF2 if p == 2 else GF3
    g = build_grid(m, n)
    for pol in (BLACK, WHITE):
        if p ** len(g.colored(pol)) > 40000:
            continue
        size = brute_force_kernel_size(m, n, pol, p)
        dim = len(oracle_nullspace(adjacency_matrix(g, matrix_for(pol)), field))
        assert size == p ** dim


@pytest.mark.parametrize("m, n", [(5, 5), (7, 7), (11, 5), (8, 5), (9, 4), (6, 6), (14, 9)])
def test_oracle_rank_matches_sympy(m, n):
    g = build_grid(m, n)
    for direction in (BLACK_TO_WHITE, WHITE_TO_BLACK):
        mat = adjacency_matrix(g, direction)
        dense = sympy.Matrix(mat.to_dense()) if mat.rows else sympy.zeros(0, mat.cols)
        assert len(oracle_nullspace(mat, QQ)) == mat.cols - dense.rank()


@pytest.mark.parametrize("m, n, dims", [((7), 7, (4, 3)), (7, 4, (0, 0)), (11, 5, (3, 2)), (1, 1, (1, 0))])
def test_kernel_dimensions_examples(m, n, dims):
    assert kernel_dimensions(m, n) == dims


@pytest.mark.parametrize("field", [GF2, GF3, QQ])
def test_kernel_dimensions_11x5_by_oracle(field):
    g = build_grid(11, 5)
    got = tuple(len(oracle_nullspace(adjacency_matrix(g, d), field)) for d in (BLACK_TO_WHITE, WHITE_TO_BLACK))
    assert got == (3, 2)


def test_kernel_dimensions_transpose():
    for m in range(1, 31):
        for n in range(1, 31):
            assert kernel_dimensions(m, n) == kernel_dimensions(n, m)


def test_oracle_examples():
    ns = oracle_nullspace(adjacency_matrix(build_grid(2, 2)), QQ)
    assert len(ns) == 1
    v = ns[0]
    assert v[(0, 0)] == -v[(1, 1)] != 0
    for f in TEST_FIELDS:
        assert len(oracle_nullspace(adjacency_matrix(build_grid(7, 4)), f)) == 0
    assert len(oracle_nullspace(adjacency_matrix(build_grid(1, 1), WHITE_TO_BLACK), QQ)) == 0


def test_neighbor_sum_examples():
    g = build_grid(2, 2)
    zero = KernelVector(g, BLACK, QQ)
    assert neighbor_sum(zero, (0, 1)) == 0
    v = KernelVector(g, BLACK, QQ, {(0, 0): Fraction(1), (1, 1): Fraction(-1)})
    assert neighbor_sum(v, (0, 1)) == 0
    assert neighbor_sum(v, (0, 0)) == 0
    w = KernelVector(g, BLACK, QQ, {(0, 0): Fraction(1)})
    assert neighbor_sum(w, (1, 0)) == 1


def test_kernel_vector_rejects_wrong_color():
    with pytest.raises(KernelError):
        KernelVector(build_grid(2, 2), BLACK, QQ, {(1, 0): Fraction(1)})
    with pytest.raises(KernelError):
        KernelVector(build_grid(2, 2), BLACK, QQ, {(2, 2): Fraction(1)})


def test_square_seed_examples():
    v = square_kernel_from_seed(2, BLACK, {(0, 0): 1}, QQ)
    assert dict(v.values) == {(0, 0): 1, (1, 1): -1}
    v = square_kernel_from_seed(3, BLACK, {(0, 0): 1, (0, 2): 0}, QQ)
    assert dict(v.values) == {(0, 0): 1, (1, 1): -1, (2, 2): 1}
    assert v[(2, 0)] == 0 and v[(0, 2)] == 0
    assert all(neighbor_sum(v, w) == 0 for w in build_grid(3, 3).white_points)
    u = square_kernel_from_seed(3, WHITE, {(0, 1): 1}, GF2)
    assert set(u.values) == {(0, 1), (1, 0), (1, 2), (2, 1)}
    assert is_kernel_vector(u)


def test_square_seed_off_support_rejected():
    with pytest.raises(KernelError):
        square_kernel_from_seed(3, BLACK, {(0, 1): 1}, QQ)
    with pytest.raises(KernelError):
        square_kernel_from_seed(3, WHITE, {(1, 0): 1}, QQ)


@pytest.mark.parametrize("c", range(1, 12))
@pytest.mark.parametrize("polarity", [BLACK, WHITE])
def test_every_seed_closes_on_squares(c, polarity):
    pts = [(0, y) for y in range(0 if polarity == BLACK else 1, c, 2)]
    for values in product((-1, 0, 2), repeat=min(len(pts), 3)):
        seed = dict(zip(pts, values))
        for f in (QQ, GF5):
            assert is_kernel_vector(square_kernel_from_seed(c, polarity, seed, f))


def test_odd_extend_identity_on_square():
    v = square_kernel_from_seed(4, BLACK, {(0, 0): 1}, QQ)
    assert odd_extend(v, 4, 4) == v


def test_odd_extend_5x5_from_2x2():
    # (3, 3) is the double mirror image of (1, 1) across x = 2 and y = 2.
    v = odd_extend(square_kernel_from_seed(2, BLACK, {(0, 0): 1}, QQ), 5, 5)
    assert dict(v.values) == {(0, 0): 1, (1, 1): -1, (4, 0): -1, (3, 1): 1,
                              (0, 4): -1, (1, 3): 1, (4, 4): 1, (3, 3): -1}
    assert is_kernel_vector(v)
    assert len(oracle_nullspace(adjacency_matrix(build_grid(5, 5)), QQ)) == 3


def test_odd_extend_zero_on_grid_and_mismatch():
    sq = square_kernel_from_seed(4, WHITE, {(0, 1): 1}, GF7)
    v = odd_extend(sq, 14, 9)
    assert in_grid_zero_set(v) and is_kernel_vector(v)
    with pytest.raises(KernelError):
        odd_extend(sq, 13, 9)


def test_structured_basis_7x7():
    basis = structured_basis(7, 7, BLACK, QQ)
    assert len(basis) == 4
    seeds = [{p: v[p] for p in [(0, 0), (0, 2), (0, 4), (0, 6)] if v[p]} for v in basis]
    assert seeds == [{(0, 0): 1}, {(0, 0): -1, (0, 2): 1}, {(0, 2): -1, (0, 4): 1}, {(0, 4): -1, (0, 6): 1}]
    assert len(structured_basis(7, 7, WHITE, QQ)) == 3


def test_structured_basis_small_cases():
    for f in TEST_FIELDS:
        assert len(structured_basis(7, 4, BLACK, f)) == 0
    (u,) = structured_basis(3, 3, WHITE, GF2)
    assert set(u.values) == {(1, 0), (0, 1), (2, 1), (1, 2)}


def test_even_square_white_basis_is_full():
    # Both first-column white points of a c x c square with c even seed the basis.
    for c in (2, 4, 6, 8):
        assert len(structured_basis(c, c, WHITE, QQ)) == c // 2


@pytest.mark.parametrize("m, n", [(14, 9), (11, 5), (8, 5), (15, 7), (23, 11), (9, 9), (20, 6)])
@pytest.mark.parametrize("field", TEST_FIELDS)
def test_structured_basis_properties(m, n, field):
    dec = decomposition(m, n)
    g = build_grid(m, n)
    for k, pol in enumerate((BLACK, WHITE)):
        basis = structured_basis(m, n, pol, field)
        oracle = oracle_nullspace(adjacency_matrix(g, matrix_for(pol)), field)
        assert len(basis) == len(oracle) == kernel_dimensions(m, n)[k]
        assert vectors_rank(basis) == len(basis)
        assert vectors_rank(list(basis) + list(oracle)) == len(basis)
        for v in basis:
            assert all(field.signed(x) in (1, -1) for x in v.values.values())
            assert is_kernel_vector(v)
            assert in_grid_zero_set(v)
            assert check_symmetries(v)
            for corner in dec.squares:
                assert is_kernel_vector(restrict_to_square(v, corner, dec.c))
        for v in oracle:
            assert in_grid_zero_set(v)


@pytest.mark.parametrize("m, n", [(14, 9), (9, 14), (5, 5), (11, 5)])
def test_symmetries_hold_on_oracle_vectors(m, n):
    for pol in (BLACK, WHITE):
        for v in oracle_nullspace(adjacency_matrix(build_grid(m, n), matrix_for(pol)), QQ):
            assert check_symmetries(v)


def test_symmetry_failures():
    g = build_grid(3, 3)
    rep = check_symmetries(KernelVector(g, BLACK, QQ, {(0, 2): Fraction(1)}))
    assert not rep and rep.violation == (2, 0)
    assert check_symmetries(KernelVector(g, BLACK, QQ))
    # Diagonally symmetric, but not antisymmetric about the empty column x = 1.
    rep = check_symmetries(KernelVector(g, BLACK, QQ, {(0, 0): Fraction(1), (2, 2): Fraction(1)}))
    assert not rep and rep.violation == (0, 0)


def test_json_roundtrip():
    for f in (GF2, GF7, QQ):
        for v in structured_basis(8, 5, WHITE, f):
            doc = v.to_json()
            assert KernelVector.from_json(doc) == v
    doc = structured_basis(3, 3, BLACK, QQ)[0].to_json()
    assert doc["entries"] == [[0, 0, "1/1"], [1, 1, "-1/1"], [2, 2, "1/1"]]


def test_packed_bits_roundtrip():
    for v in structured_basis(15, 15, BLACK, GF2):
        assert KernelVector.from_bits(v.graph, BLACK, v.to_bits()) == v
