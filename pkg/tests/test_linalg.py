import numpy as np
import pytest

from gbsat.linalg import SingularMatrixError, left_kernel_triangular, matmul_mod, rank, rref, solve

P = 1073741827


def test_matmul_mod_has_no_overflow():
    rng = np.random.default_rng(1)
    A = rng.integers(0, P, size=(5, 300))
    B = rng.integers(0, P, size=(300, 4))
    exact = [[sum(int(A[i, k]) * int(B[k, j]) for k in range(300)) % P for j in range(4)] for i in range(5)]
    assert matmul_mod(A, B, P).tolist() == exact


def test_rref_is_independent_of_row_order():
    rng = np.random.default_rng(2)
    M = rng.integers(0, 7, size=(4, 6))
    M = np.vstack([M, (M[0] + 2 * M[1]) % 7])
    R1, piv1 = rref(M, 7)
    R2, piv2 = rref(M[::-1], 7)
    assert piv1 == piv2 and (R1 == R2).all()
    assert rank(M, 7) == len(piv1) <= 4


def test_left_kernel_is_triangular():
    M = np.array([[1, 0], [0, 0], [1, 0], [0, 0]])
    K = left_kernel_triangular(M, 7)
    assert [k.tolist() for k in K] == [[0, 1, 0, 0], [6, 0, 1, 0], [0, 0, 0, 1]]
    for k in K:
        assert not matmul_mod(k[None, :], M, 7).any()


def test_solve_and_singular_detection():
    A = np.array([[1, 1], [1, 2]])
    assert solve(A, np.array([3, 5]), 7).tolist() == [1, 2]
    with pytest.raises(SingularMatrixError):
        solve(np.array([[1, 2], [2, 4]]), np.array([1, 1]), 7)
