"""Staircases and (projected) multiplication-by-x_n matrices.

Column j of the matrix holds the coordinates of NF(x_n * sigma_j) in the
chosen monomial basis, with monomials of the staircase that lie outside the
basis projected away.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from ..linalg import matmul_mod
from ..ring import DRL, Polynomial, Reducer, divisor_closure, mono_divides


class Staircase:
    """Monomials sorted increasingly under DRL, with a position index."""

    def __init__(self, monomials, closed: bool = True):
        self.monomials = sorted(set(monomials), key=DRL.key)
        self.index = {m: k for k, m in enumerate(self.monomials)}
        self.closed = closed
        if closed and divisor_closure(self.monomials) != set(self.monomials):
            raise ValueError("monomial set is not closed under division")

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __contains__(self, m):
        return m in self.index

    def __eq__(self, other):
        return isinstance(other, Staircase) and self.monomials == other.monomials

    def vector(self, f: Polynomial, p: int) -> np.ndarray:
        """Coordinates of f on this basis; monomials outside it are dropped."""
        v = np.zeros(len(self.monomials), dtype=np.int64)
        for c, m in f.terms:
            k = self.index.get(m)
            if k is not None:
                v[k] = c
        return v

    def polynomial(self, v: np.ndarray, ring) -> Polynomial:
        return ring.from_dict({self.monomials[k]: int(v[k]) for k in np.flatnonzero(v)})

    def __repr__(self):
        return f"Staircase({self.monomials})"


def drl_basis(G: Sequence[Polynomial]) -> list[Polynomial]:
    return [g.reorder(g.ring.with_order(DRL)) for g in G if g]


def full_staircase(G: Sequence[Polynomial]) -> Staircase:
    """Staircase of a zero-dimensional reduced DRL basis."""
    G = drl_basis(G)
    if not G:
        raise ValueError("empty basis")
    n = G[0].ring.n
    lms = [g.lm for g in G]
    pure = [0] * n
    for m in lms:
        nz = [k for k, e in enumerate(m) if e]
        if len(nz) == 1:
            e = m[nz[0]]
            pure[nz[0]] = e if not pure[nz[0]] else min(pure[nz[0]], e)
        elif not nz:
            return Staircase([])
    if not all(pure):
        raise ValueError("ideal is not zero-dimensional")
    out = []
    stack = [(0,) * n]
    seen = set(stack)
    while stack:
        m = stack.pop()
        if any(mono_divides(lm, m) for lm in lms):
            continue
        out.append(m)
        for k in range(n):
            mm = m[:k] + (m[k] + 1,) + m[k + 1:]
            if mm not in seen:
                seen.add(mm)
                stack.append(mm)
    return Staircase(out)


class ColumnKind(str, Enum):
    SHIFT = "shift"
    ZERO = "zero"
    DENSE = "dense"


@dataclass
class SparseMultMatrix:
    N: int
    p: int
    columns: list                 # dict row -> coefficient, one per column
    kinds: list
    basis: Staircase | None = None
    nf_count: int = 0             # columns that needed a real normal form
    _dense: np.ndarray | None = field(default=None, repr=False)

    @classmethod
    def from_dense(cls, A, p: int) -> "SparseMultMatrix":
        A = np.asarray(A, dtype=np.int64) % p
        N = A.shape[0]
        columns, kinds = [], []
        for j in range(N):
            col = {int(i): int(A[i, j]) for i in np.flatnonzero(A[:, j])}
            columns.append(col)
            if not col:
                kinds.append(ColumnKind.ZERO)
            elif len(col) == 1 and list(col.values()) == [1]:
                kinds.append(ColumnKind.SHIFT)
            else:
                kinds.append(ColumnKind.DENSE)
        return cls(N, p, columns, kinds)

    def dense(self) -> np.ndarray:
        if self._dense is None:
            A = np.zeros((self.N, self.N), dtype=np.int64)
            for j, col in enumerate(self.columns):
                for i, c in col.items():
                    A[i, j] = c
            self._dense = A
        return self._dense

    def left_apply(self, r: np.ndarray) -> np.ndarray:
        """The row vector r M."""
        if self.N == 0:
            return np.zeros(0, dtype=np.int64)
        return matmul_mod(np.asarray(r, dtype=np.int64)[None, :], self.dense(), self.p)[0]

    def apply(self, v: np.ndarray) -> np.ndarray:
        """The column vector M v."""
        if self.N == 0:
            return np.zeros(0, dtype=np.int64)
        return matmul_mod(self.dense(), np.asarray(v, dtype=np.int64).reshape(-1, 1), self.p)[:, 0]

    def check(self) -> None:
        for col, kind in zip(self.columns, self.kinds):
            if kind == ColumnKind.SHIFT:
                assert len(col) == 1 and list(col.values()) == [1]
            elif kind == ColumnKind.ZERO:
                assert not col
            assert all(0 <= i < self.N for i in col)


def _build(G: Sequence[Polynomial], basis: Staircase) -> SparseMultMatrix:
    G = drl_basis(G)
    ring = G[0].ring
    n = ring.n
    lm_index = {g.lm: g for g in G}
    lms = list(lm_index)
    red = None
    columns, kinds = [], []
    nf_count = 0
    for sigma in basis.monomials:
        m = sigma[:n - 1] + (sigma[n - 1] + 1,)
        k = basis.index.get(m)
        if k is not None:
            columns.append({k: 1})
            kinds.append(ColumnKind.SHIFT)
            continue
        if not any(mono_divides(lm, m) for lm in lms):
            # in the staircase but outside the basis: projected to zero
            columns.append({})
            kinds.append(ColumnKind.ZERO)
            continue
        g = lm_index.get(m)
        if g is not None:
            inv = ring.field.inv(g.lc)
            nf = Polynomial(ring, g.terms[1:]).scale(-inv % ring.p)
        else:
            if red is None:
                red = Reducer(G)
            nf = red.normal_form(ring.monomial(m))
            nf_count += 1
        col = {}
        for c, mm in nf.terms:
            i = basis.index.get(mm)
            if i is not None:
                col[i] = c
        columns.append(col)
        kinds.append(ColumnKind.DENSE)
    return SparseMultMatrix(len(basis), ring.p, columns, kinds, basis, nf_count)


def build_mult_matrix(G: Sequence[Polynomial], S: Staircase | None = None) -> SparseMultMatrix:
    """Matrix of f -> NF(x_n f) on the full staircase of a zero-dimensional basis."""
    full = full_staircase(G)
    if S is None:
        S = full
    elif S != full:
        raise ValueError("S is not the staircase of the given basis")
    return _build(G, S)


def build_projected_matrix(G: Sequence[Polynomial], basis: Staircase | Sequence) -> SparseMultMatrix:
    """Matrix of f -> pi(NF(x_n f)) on a subset of the staircase."""
    if not isinstance(basis, Staircase):
        basis = Staircase(basis, closed=False)
    G = drl_basis(G)
    lms = [g.lm for g in G]
    for m in basis:
        if any(mono_divides(lm, m) for lm in lms):
            raise ValueError(f"basis monomial {m} is not in the staircase")
    return _build(G, basis)
