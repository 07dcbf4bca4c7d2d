"""Scalar sequences r M^i c, Berlekamp-Massey and Hankel solving over GF(p).

Univariate polynomials are plain coefficient lists, lowest degree first.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from ..linalg import SingularMatrixError, matmul_mod, solve


class HankelSingularError(SingularMatrixError):
    """The Hankel matrix is singular: the sequence order is below D'."""


def berlekamp_massey(w: Sequence[int], p: int) -> list[int]:
    """Monic characteristic polynomial of the shortest recurrence of w.

    The result [c_0, ..., c_{d-1}, 1] satisfies
    w[i+d] + c_{d-1} w[i+d-1] + ... + c_0 w[i] = 0 for every valid i.
    An all-zero sequence gives [1].
    """
    w = [int(a) % p for a in w]
    C = [1]
    B = [1]
    L, m, b = 0, 1, 1
    for i, wi in enumerate(w):
        # discrepancy of the current connection polynomial
        d = wi
        for j in range(1, L + 1):
            if j < len(C):
                d = (d + C[j] * w[i - j]) % p
        if d == 0:
            m += 1
            continue
        coef = d * pow(b, -1, p) % p
        T = list(C)
        need = len(B) + m
        if len(C) < need:
            C = C + [0] * (need - len(C))
        for j, bj in enumerate(B):
            C[j + m] = (C[j + m] - coef * bj) % p
        if 2 * L <= i:
            L = i + 1 - L
            B = T
            b = d
            m = 1
        else:
            m += 1
    C = C + [0] * (L + 1 - len(C))
    # reverse the connection polynomial: x^L C(1/x)
    return [C[L - k] for k in range(L + 1)]


def annihilates(poly: Sequence[int], w: Sequence[int], p: int) -> bool:
    """True if the recurrence given by poly holds on every window of w."""
    d = len(poly) - 1
    for i in range(len(w) - d):
        if sum(c * w[i + k] for k, c in enumerate(poly)) % p:
            return False
    return True


def hankel_solve(w0: Sequence[int], wk: Sequence[int], D: int, p: int) -> list[int]:
    """Solve H gamma = wk[:D] with H[i][j] = w0[i+j], 0 <= i, j < D."""
    if D == 0:
        return []
    if len(w0) < 2 * D - 1 or len(wk) < D:
        raise ValueError(f"need {2 * D - 1} and {D} terms, got {len(w0)} and {len(wk)}")
    H = np.array([[int(w0[i + j]) % p for j in range(D)] for i in range(D)], dtype=np.int64)
    rhs = np.array([int(a) % p for a in wk[:D]], dtype=np.int64)
    try:
        gamma = solve(H, rhs, p)
    except SingularMatrixError:
        raise HankelSingularError(f"sequence order below {D}") from None
    return [int(g) for g in gamma]


class RowIterates:
    """Lazily produces the row vectors r, rM, rM^2, ... and keeps them."""

    def __init__(self, M, r: np.ndarray):
        self.M = M
        self.p = M.p
        self.rows = [np.asarray(r, dtype=np.int64) % self.p]

    def __len__(self):
        return len(self.rows)

    def extend(self, count: int) -> None:
        while len(self.rows) < count:
            self.rows.append(self.M.left_apply(self.rows[-1]))

    def stacked(self, count: int) -> np.ndarray:
        self.extend(count)
        return np.vstack(self.rows[:count])

    def terms(self, c: np.ndarray, count: int) -> list[int]:
        """Scalar products (r M^i) . c for i < count."""
        if count == 0:
            return []
        V = self.stacked(count)
        return [int(a) for a in matmul_mod(V, np.asarray(c, dtype=np.int64).reshape(-1, 1), self.p)[:, 0]]

    def stream(self, c: np.ndarray) -> Iterator[int]:
        c = np.asarray(c, dtype=np.int64).reshape(-1, 1)
        i = 0
        while True:
            self.extend(i + 1)
            yield int(matmul_mod(self.rows[i][None, :], c, self.p)[0, 0])
            i += 1


def sequences(M, r: np.ndarray, cs: Sequence[np.ndarray], D: int) -> list[list[int]]:
    """(r M^i c_0) for i < 2D and (r M^i c_k) for i < D, k >= 1."""
    r = np.asarray(r)
    if r.shape != (M.N,) or any(np.asarray(c).shape != (M.N,) for c in cs):
        raise ValueError(f"vectors must have length {M.N}")
    it = RowIterates(M, r)
    out = []
    for k, c in enumerate(cs):
        out.append(it.terms(c, 2 * D if k == 0 else D))
    return out


def online_minimal_polynomial(stream: Iterable[int], p: int, limit: int, block: int = 16,
                              accept=None) -> tuple[list[int], list[int]]:
    """Berlekamp-Massey on a lazily generated sequence.

    BM is re-run every ``block`` terms; the loop stops once the candidate
    has been stable for 2 * deg further terms and ``accept(candidate)``
    agrees, or when ``limit`` terms have been read. Returns (poly, terms).
    """
    terms: list[int] = []
    cand = None
    since = 0
    it = iter(stream)
    while len(terms) < limit:
        target = min(limit, len(terms) + block)
        while len(terms) < target:
            terms.append(next(it))
        poly = berlekamp_massey(terms, p)
        if poly != cand:
            cand, since = poly, len(terms)
            continue
        if len(terms) - since >= 2 * (len(poly) - 1) and (accept is None or accept(poly)):
            return poly, terms
    return berlekamp_massey(terms, p), terms

