import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from loclib.construct import G0_TRANSPOSE
from loclib.errors import DimensionMismatch, NoSolution, RankDeficient
from loclib.field import GF256, make_field
from loclib.linalg import (
    Echelon,
    FieldMatrix,
    column_submatrix,
    generator_from_parity,
    inverse,
    matmul,
    nullspace,
    parity_from_generator,
    rank,
    solve,
    systematize,
    vstack,
)

GF4 = make_field(2)
GF16 = make_field(4)


def matrices(field, max_rows=5, max_cols=6):
    @st.composite
    def build(draw):
        r = draw(st.integers(1, max_rows))
        c = draw(st.integers(1, max_cols))
        rows = draw(st.lists(st.lists(st.integers(0, field.q - 1), min_size=c, max_size=c), min_size=r, max_size=r))
        return FieldMatrix.from_rows(field, rows, c)

    return build()


def test_rank_small_cases():
    assert rank(FieldMatrix.identity(GF256, 5)) == 5
    assert rank(FieldMatrix.zeros(GF256, 3, 4)) == 0
    assert rank(FieldMatrix.from_rows(GF4, [[1, 1], [1, 1]])) == 1


def test_column_submatrix():
    M = FieldMatrix.identity(GF16, 3)
    assert column_submatrix(M, [0, 1, 2]) == M
    empty = column_submatrix(M, [])
    assert empty.shape == (3, 0) and rank(empty) == 0
    assert column_submatrix(M, [0]).to_list() == [[1], [0], [0]]


@settings(max_examples=60, deadline=None)
@given(matrices(GF16))
def test_rank_transpose(M):
    assert rank(M) == rank(M.T)


@settings(max_examples=60, deadline=None)
@given(matrices(GF4))
def test_rank_nullity(M):
    N = nullspace(M)
    assert rank(M) + N.rows == M.cols
    if N.rows:
        assert matmul(M, N.T).is_zero()


def test_solve_identity_and_zero():
    I = FieldMatrix.identity(GF256, 4)
    assert solve(I, [9, 8, 7, 6]) == [9, 8, 7, 6]
    with pytest.raises(NoSolution):
        solve(FieldMatrix.zeros(GF256, 3, 3), [0, 1, 0])
    with pytest.raises(DimensionMismatch):
        solve(I, [1, 2])


def test_solve_recovers_x0():
    rng = np.random.default_rng(7)
    for _ in range(20):
        A = FieldMatrix.random(GF256, 7, 4, rng)
        if rank(A) < 4:
            continue
        x0 = rng.integers(0, 256, size=4).tolist()
        assert solve(A, A.matvec(x0)) == x0


def test_inverse():
    rng = np.random.default_rng(3)
    A = FieldMatrix.random(GF16, 4, 4, rng)
    while rank(A) < 4:
        A = FieldMatrix.random(GF16, 4, 4, rng)
    assert matmul(A, inverse(A)) == FieldMatrix.identity(GF16, 4)
    with pytest.raises(RankDeficient):
        inverse(FieldMatrix.zeros(GF16, 2, 2))


def test_echelon_membership():
    e = Echelon(GF256)
    assert e.add([1, 2, 3])
    assert e.add([0, 1, 0])
    assert not e.add([1, 3, 3])
    assert e.contains(GF256.scale([1, 2, 3], 77))
    assert e.rank == 2


def test_systematize_fixed_point():
    P = [[3, 1, 4], [1, 5, 9]]
    H = FieldMatrix.from_rows(GF16, [P[0] + [1, 0], P[1] + [0, 1]])
    Hs, perm = systematize(H)
    assert Hs == H and perm == list(range(5))


def test_systematize_random_gf16():
    rng = np.random.default_rng(11)
    H = FieldMatrix.random(GF16, 3, 6, rng)
    while rank(H) < 3:
        H = FieldMatrix.random(GF16, 3, 6, rng)
    Hs, perm = systematize(H)
    assert rank(Hs) == 3
    assert column_submatrix(Hs, [3, 4, 5]) == FieldMatrix.identity(GF16, 3)
    # same row space once columns are put back in place
    back = column_submatrix(Hs, [perm.index(j) for j in range(6)])
    assert rank(vstack(H, back)) == 3


def test_systematize_rank_deficient():
    H = FieldMatrix.from_rows(GF16, [[1, 2, 3], [1, 2, 3]])
    with pytest.raises(RankDeficient):
        systematize(H)


def test_g0_from_parity():
    G0 = FieldMatrix.from_rows(GF256, [list(r) for r in zip(*G0_TRANSPOSE)])
    H = parity_from_generator(G0)
    G, perm = generator_from_parity(H)
    assert column_submatrix(G, perm[:10]) == FieldMatrix.identity(GF256, 10)
    # re-systematizing on G0's own information set gives G0 back exactly
    info = [j for j in range(16) if sum(1 for v in G0.column(j) if v) == 1 and 1 in G0.column(j)]
    info.sort(key=lambda j: G0.column(j).index(1))
    assert matmul(inverse(column_submatrix(G, info)), G) == G0


@settings(max_examples=40, deadline=None)
@given(matrices(GF16, 4, 7))
def test_generator_parity_orthogonal(H):
    if rank(H) < H.rows or H.rows == H.cols:
        return
    G, _ = generator_from_parity(H)
    assert G.rows == H.cols - H.rows
    assert matmul(G, H.T).is_zero()
