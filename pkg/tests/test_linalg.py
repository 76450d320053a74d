import random

from hypothesis import given, settings, strategies as st

from arquiver.linalg import (
    QQ,
    FieldFp,
    Matrix,
    cokernel_basis,
    echelon,
    inverse,
    invertible,
    rank,
    rank_kernel,
    solve,
)

from oracles import naive_row_reduce

F2 = FieldFp(2)
F5 = FieldFp(5)


def test_rank_kernel_basic():
    m = Matrix(QQ, 2, 2, [[1, 1], [0, 0]])
    rk, ker = rank_kernel(m)
    assert rk == 1
    assert len(ker) == 1
    # echelon-normalized: free coordinate is 1
    assert ker[0][1] == 1 and ker[0][0] == -1


def test_zero_rows_matrix():
    m = Matrix(QQ, 0, 4)
    rk, ker = rank_kernel(m)
    assert rk == 0
    assert len(ker) == 4
    assert [v.index(QQ.one) for v in ker] == [0, 1, 2, 3]


def test_cokernel_identity_and_zero():
    assert cokernel_basis(Matrix.identity(QQ, 3)) == []
    assert len(cokernel_basis(Matrix(QQ, 3, 2))) == 3


def test_cokernel_annihilates_image():
    rng = random.Random(7)
    m = Matrix(QQ, 4, 3, [[rng.randrange(-3, 4) for _ in range(3)] for _ in range(4)])
    for func in cokernel_basis(m):
        for j in range(m.cols):
            s = sum(func[i] * m[i, j] for i in range(m.rows))
            assert s == 0


def test_random_f2_against_naive_oracle():
    rng = random.Random(1234)
    for _ in range(60):
        rows = [[rng.randrange(2) for _ in range(7)] for _ in range(5)]
        m = Matrix(F2, 5, 7, rows)
        rk, ker = rank_kernel(m)
        assert rk == naive_row_reduce(rows, p=2)
        assert rk + len(ker) == 7
        for v in ker:
            assert all(x == 0 for x in m.apply(v))


def test_rank_transpose_500_random_both_fields():
    rng = random.Random(99)
    for i in range(500):
        field = (QQ, F2, F5)[i % 3]
        r, c = rng.randrange(1, 6), rng.randrange(1, 6)
        rows = [[rng.randrange(-4, 5) for _ in range(c)] for _ in range(r)]
        m = Matrix(field, r, c, rows)
        assert rank(m) == rank(m.transpose())
        rk, ker = rank_kernel(m)
        assert rk + len(ker) == c


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=3, max_size=3
    )
)
def test_ranknullity_property(rows):
    m = Matrix(QQ, 3, 4, rows)
    rk, ker = rank_kernel(m)
    assert rk + len(ker) == 4
    for v in ker:
        assert all(x == 0 for x in m.apply(v))


def test_solve_and_inverse():
    m = Matrix(QQ, 3, 3, [[2, 0, 1], [1, 1, 0], [0, 3, 1]])
    assert invertible(m)
    inv = inverse(m)
    assert inv.mul(m).a == Matrix.identity(QQ, 3).a
    x = solve(m, [QQ(1), QQ(2), QQ(3)])
    assert m.apply(x) == [QQ(1), QQ(2), QQ(3)]
    singular = Matrix(QQ, 2, 2, [[1, 2], [2, 4]])
    assert solve(singular, [QQ(0), QQ(1)]) is None


def test_echelon_pivots_are_one():
    m = Matrix(QQ, 3, 4, [[2, 4, 0, 2], [1, 2, 1, 0], [3, 6, 1, 2]])
    pivots, ech = echelon(m)
    for i, c in enumerate(pivots):
        assert ech[i][c] == 1
