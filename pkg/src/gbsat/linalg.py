"""Dense linear algebra over GF(p) on int64 numpy arrays.

Entries are kept in [0, p) with p < 2^31, so a single product fits in an
int64. Dot products are split into 16-bit halves to keep sums exact.
"""
from __future__ import annotations

import numpy as np


class SingularMatrixError(ArithmeticError):
    pass


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """(A @ B) mod p without int64 overflow for inner dimensions below 2^15."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[-1] == 0:
        return np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
    lo = A & 0xFFFF
    hi = A >> 16
    r_lo = (lo @ B) % p
    r_hi = (hi @ B) % p
    return (r_lo + (r_hi << 16) % p) % p


def rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns.

    The result only depends on the row space of M.
    """
    M = np.array(M, dtype=np.int64) % p
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            M[[r, k]] = M[[k, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = M[r] * inv % p
        col = M[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            M[hit] = (M[hit] - np.outer(col[hit], M[r]) % p) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(M: np.ndarray, p: int) -> int:
    return len(rref(M, p)[1])


def left_kernel_triangular(M: np.ndarray, p: int) -> list[np.ndarray]:
    """Basis of {b : b M = 0}, one vector per dependent row.

    Rows are processed in order; when row i is a combination of the rows
    before it, the emitted vector b has b[i] = 1 and b[j] = 0 for j > i.
    """
    M = np.array(M, dtype=np.int64) % p
    nrows, ncols = M.shape
    B = np.zeros((nrows, ncols), dtype=np.int64)
    C = np.zeros((nrows, nrows), dtype=np.int64)
    pivcols: list[int] = []
    kernel = []
    for i in range(nrows):
        v = M[i].copy()
        combo = np.zeros(nrows, dtype=np.int64)
        combo[i] = 1
        k = len(pivcols)
        if k:
            coeffs = v[pivcols]
            if coeffs.any():
                v = (v - matmul_mod(coeffs[None, :], B[:k], p)[0]) % p
                combo = (combo - matmul_mod(coeffs[None, :], C[:k], p)[0]) % p
        nz = np.flatnonzero(v)
        if nz.size == 0:
            kernel.append(combo)
            continue
        c = nz[0]
        inv = pow(int(v[c]), -1, p)
        v = v * inv % p
        combo = combo * inv % p
        col = B[:k, c].copy()
        hit = np.flatnonzero(col)
        if hit.size:
            B[hit] = (B[hit] - np.outer(col[hit], v) % p) % p
            C[hit] = (C[hit] - np.outer(col[hit], combo) % p) % p
        B[k] = v
        C[k] = combo
        pivcols.append(int(c))
    return kernel


def solve(A: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Solve the square system A x = b; raises SingularMatrixError."""
    A = np.array(A, dtype=np.int64) % p
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError(f"expected a square matrix, got {A.shape}")
    aug = np.concatenate([A, np.asarray(b, dtype=np.int64).reshape(n, 1) % p], axis=1)
    R, piv = rref(aug, p)
    if len(piv) < n or piv[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return R[:n, n].copy()
