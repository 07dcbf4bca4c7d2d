import random

import numpy as np
import pytest

from gbsat.fglm import HankelSingularError, SparseMultMatrix, annihilates, berlekamp_massey, hankel_solve, sequences
from gbsat.fglm.recurrence import online_minimal_polynomial

P = 1073741827


def companion(poly, p):
    """Companion matrix of a monic poly (low to high), acting on row vectors."""
    d = len(poly) - 1
    A = np.zeros((d, d), dtype=np.int64)
    for i in range(d - 1):
        A[i + 1, i] = 1
    for i in range(d):
        A[i, d - 1] = (-poly[i]) % p
    return A


def test_sequences_examples():
    M = SparseMultMatrix.from_dense([[0]], 7)
    assert sequences(M, np.array([1]), [np.array([1])], 1) == [[1, 0]]
    M = SparseMultMatrix.from_dense([[0, 1], [1, 1]], 7)
    assert sequences(M, np.array([1, 0]), [np.array([1, 0])], 2)[0] == [1, 0, 1, 1]
    # a canonical basis vector picks one coordinate of r M^i
    M = SparseMultMatrix.from_dense([[1, 2], [3, 4]], 7)
    r = np.array([1, 5])
    w0, w1 = sequences(M, r, [np.array([0, 1]), np.array([1, 0])], 2)
    rows = [r]
    for _ in range(3):
        rows.append(rows[-1] @ M.dense() % 7)
    assert w0 == [int(v[1]) for v in rows] and w1 == [int(v[0]) for v in rows[:2]]
    with pytest.raises(ValueError):
        sequences(M, np.array([1, 2, 3]), [np.array([1, 0])], 2)


def test_berlekamp_massey_examples():
    assert berlekamp_massey([1, 1, 2, 3, 5, 8], 7) == [6, 6, 1]
    assert berlekamp_massey([3, 6, 12, 24], 101) == [99, 1]
    assert berlekamp_massey([0, 0, 0, 0], 7) == [1]
    g = berlekamp_massey([0, 0, 1], 7)
    assert len(g) == 4 and annihilates(g, [0, 0, 1], 7)


def test_hankel_examples():
    assert hankel_solve([1, 1, 2], [3, 5], 2, 7) == [1, 2]
    assert hankel_solve([3], [5], 1, 7) == [5 * pow(3, -1, 7) % 7]
    with pytest.raises(HankelSingularError):
        hankel_solve([1, 2, 4], [1, 1], 2, 7)


@pytest.mark.parametrize("seed", range(25))
def test_berlekamp_massey_on_companion_sequences(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 20)
    poly = [rng.randrange(P) for _ in range(d)] + [1]
    M = SparseMultMatrix.from_dense(companion(poly, P), P)
    r = np.zeros(d, dtype=np.int64)
    r[0] = 1
    c = np.zeros(d, dtype=np.int64)
    c[d - 1] = 1
    w = sequences(M, r, [c], d)[0]
    assert berlekamp_massey(w, P) == poly
    assert annihilates(poly, w, P)


def test_online_minimal_polynomial_stops_early():
    rng = random.Random(5)
    poly = [rng.randrange(P) for _ in range(3)] + [1]
    M = SparseMultMatrix.from_dense(companion(poly, P), P)
    from gbsat.fglm.recurrence import RowIterates
    it = RowIterates(M, np.array([1, 0, 0]))
    found, terms = online_minimal_polynomial(it.stream(np.array([0, 0, 1])), P, limit=10_000, block=4)
    assert found == poly and len(terms) < 40
