import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tiltlab.exactlin import QQ, IntMatrix, Matrix, PrimeField, snf

F2 = PrimeField(2)
F5 = PrimeField(5)
F7 = PrimeField(7)


def int_det(A: IntMatrix) -> Fraction:
    # fraction-free enough for unimodularity checks at desk scale
    n = A.nrows
    assert n == A.ncols
    rows = [[Fraction(x) for x in row] for row in A.rows]
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] * inv
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def test_kernel_of_identity_is_trivial():
    K = Matrix.identity(F5, 3).kernel_basis()
    assert K.shape == (3, 0)


def test_kernel_of_zero_map_is_everything():
    K = Matrix.zeros(F5, 2, 2).kernel_basis()
    assert K.shape == (2, 2)
    assert K.rank() == 2


def test_kernel_over_f2_matches_enumeration():
    A = Matrix(F2, [[1, 1]])
    K = A.kernel_basis()
    # enumerate all four vectors of F_2^2
    expected = [v for v in itertools.product([0, 1], repeat=2) if (v[0] + v[1]) % 2 == 0 and any(v)]
    assert expected == [(1, 1)]
    assert K.shape == (2, 1)
    assert K.column(0) == [1, 1]


def test_solve_identity_returns_rhs():
    A = Matrix.identity(F7, 3)
    assert A.solve([1, 2, 3]) == [1, 2, 3]


def test_solve_scalar_mod_7():
    A = Matrix(F7, [[2]])
    assert A.solve([1]) == [4]  # 2 * 4 = 8 = 1 mod 7


def test_solve_inconsistent_returns_none():
    A = Matrix.zeros(F5, 2, 2)
    assert A.solve([1, 0]) is None


def test_solve_rationals():
    A = Matrix(QQ, [[2, 1], [1, 1]])
    x = A.solve([1, 0])
    assert x == [Fraction(1), Fraction(-1)]


def test_empty_matrices_behave_as_zero_space_maps():
    A = Matrix.zeros(F5, 0, 3)
    assert A.kernel_basis().rank() == 3
    assert A.solve([]) == [0, 0, 0]
    B = Matrix.zeros(F5, 3, 0)
    assert B.kernel_basis().shape == (0, 0)
    assert B.solve([0, 0, 0]) == []
    assert B.solve([1, 0, 0]) is None
    assert (A @ B.transpose().transpose()).shape == (0, 0)


def test_rank_nullity_on_random_matrices():
    rng = random.Random(0)
    for field in (F5, F7, QQ):
        for _ in range(200):
            r, c = rng.randrange(0, 5), rng.randrange(0, 5)
            A = Matrix(field, [[rng.randrange(-4, 5) for _ in range(c)] for _ in range(r)], c)
            assert A.rank() + A.kernel_basis().ncols == c


def test_kernel_then_solve_consistency():
    rng = random.Random(1)
    for _ in range(50):
        r, c = rng.randrange(1, 5), rng.randrange(1, 5)
        A = Matrix(F5, [[rng.randrange(5) for _ in range(c)] for _ in range(r)], c)
        K = A.kernel_basis()
        assert (A @ K).is_zero()
        for j in range(K.ncols):
            b = A.apply(K.column(j))
            assert A.solve(b) is not None


def test_inverse_round_trip():
    A = Matrix(F5, [[1, 2], [3, 4]])
    Ainv = A.inverse()
    assert A @ Ainv == Matrix.identity(F5, 2)
    assert Matrix(F5, [[1, 2], [2, 4]]).inverse() is None


def check_snf(A: IntMatrix):
    U, D, V = snf(A)
    assert (U @ A) @ V == D
    assert abs(int_det(U)) == 1
    assert abs(int_det(V)) == 1
    diag = D.diagonal()
    for i in range(D.nrows):
        for j in range(D.ncols):
            if i != j:
                assert D.rows[i][j] == 0
    for i, d in enumerate(diag):
        assert d >= 0
        if i + 1 < len(diag) and diag[i + 1] != 0:
            assert d != 0 and diag[i + 1] % d == 0
        if d == 0:
            assert all(x == 0 for x in diag[i:])
    return diag


def test_snf_diag_2_3():
    diag = check_snf(IntMatrix([[2, 0], [0, 3]]))
    assert diag == [1, 6]


def test_snf_identity():
    for n in (1, 2, 4):
        diag = check_snf(IntMatrix.identity(n))
        assert diag == [1] * n


def test_snf_gcd_row():
    diag = check_snf(IntMatrix([[4, 6]]))
    assert diag == [2]


def test_snf_empty_shapes():
    check_snf(IntMatrix([], ncols=3))
    check_snf(IntMatrix([[], [], []], ncols=0))


@settings(max_examples=120, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-30, max_value=30), min_size=1, max_size=4),
        min_size=1,
        max_size=4,
    ).filter(lambda rows: len({len(r) for r in rows}) == 1)
)
def test_snf_validity_random(rows):
    check_snf(IntMatrix(rows))


def test_snf_on_200_random_integer_matrices():
    rng = random.Random(2)
    for _ in range(200):
        r, c = rng.randrange(1, 6), rng.randrange(1, 6)
        A = IntMatrix([[rng.randrange(-25, 26) for _ in range(c)] for _ in range(r)])
        check_snf(A)


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(6)
