"""Lexicographic shape bases of I and of colon ideals I : phi.

The eliminant h_n is the minimal polynomial of the sequence r M^i phi and
the parametrizations h_k come from Hankel systems built on the same
sequence. Positive-dimensional I is handled through a finite set Sigma of
staircase monomials that carries every NF(x_n^i phi).
"""
from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from ..ring import LEX, PolyRing, Polynomial, Reducer, divisor_closure, mono_divides
from .matrix import SparseMultMatrix, Staircase, build_mult_matrix, build_projected_matrix, drl_basis
from .recurrence import (
    HankelSingularError,
    RowIterates,
    berlekamp_massey,
    hankel_solve,
    online_minimal_polynomial,
    sequences,
)

log = logging.getLogger(__name__)


class Diagnostic(str, Enum):
    NOT_SHAPE = "Not in shape position"
    BAD_VECTOR = "Bad vector"
    NOT_SHAPE_OR_BAD = "Not in shape position or bad vector"

    def __str__(self):
        return self.value


class ColonError(ValueError):
    """Precondition failure: phi in I, or the colon is not zero-dimensional."""


@dataclass
class ColonConfig:
    max_sigma: int = 10**6          # cap on the size of Sigma
    max_order: int = 4096           # cap on the number of Krylov vectors NF(x_n^i phi)
    bm_block: int = 16              # online Berlekamp-Massey re-runs every this many terms
    retries: int = 3                # extra random vectors tried after "Bad vector"
    fast_verify: bool = False       # lambda-shift check instead of exact normal forms
    reduce_sigma: bool = True


@dataclass
class ShapeBasis:
    """{h_n(x_n), x_{n-1} - h_{n-1}(x_n), ..., x_1 - h_1(x_n)}, coefficients low to high."""
    ring: PolyRing
    h_n: list
    h: list                          # h[k] parametrizes variable k, k < n - 1

    @property
    def degree(self) -> int:
        return len(self.h_n) - 1

    def univariate(self, coeffs: Sequence[int], ring: PolyRing | None = None) -> Polynomial:
        ring = ring or self.ring
        n = ring.n
        return ring.from_dict({(0,) * (n - 1) + (i,): int(c) for i, c in enumerate(coeffs)})

    def polynomials(self) -> list[Polynomial]:
        ring = self.ring.with_order(LEX)
        out = [self.univariate(self.h_n, ring)]
        for k in reversed(range(ring.n - 1)):
            out.append(ring.var(k) - self.univariate(self.h[k], ring))
        return out

    def __str__(self):
        return "\n".join(str(f) for f in self.polynomials())


def _trim(c: Sequence[int]) -> list:
    c = [int(a) for a in c]
    while c and c[-1] == 0:
        c.pop()
    return c


def random_vector(N: int, p: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(1, p, size=N, dtype=np.int64)


# -- zero-dimensional input --------------------------------------------------

def spfglm(G: Sequence[Polynomial], S: Staircase | None = None, seed: int = 0):
    """LEX basis of a zero-dimensional <G> in shape position, else a diagnostic."""
    G = drl_basis(G)
    ring = G[0].ring
    M = build_mult_matrix(G, S)
    D = M.N
    if D == 0:
        raise ColonError("the ideal is <1>")
    S = M.basis
    red = Reducer(G)
    p = ring.p
    r = random_vector(D, p, seed)
    cs = [S.vector(ring.one(), p)]
    cs += [S.vector(red.normal_form(ring.var(k)), p) for k in range(ring.n - 1)]
    w = sequences(M, r, cs, D)
    g_n = berlekamp_massey(w[0], p)
    if len(g_n) - 1 < D:
        return Diagnostic.NOT_SHAPE_OR_BAD
    h = [_trim(hankel_solve(w[0][:2 * D - 1], w[k], D, p)) for k in range(1, ring.n)]
    return ShapeBasis(ring, g_n, h)


def _verify_exact(red: Reducer, shape: ShapeBasis, phi: Polynomial):
    ring = red.ring
    if red.normal_form(shape.univariate(shape.h_n, ring) * phi):
        return Diagnostic.BAD_VECTOR
    for k in range(ring.n - 1):
        if red.normal_form((ring.var(k) - shape.univariate(shape.h[k], ring)) * phi):
            return Diagnostic.NOT_SHAPE
    return None


def spfglm_colon_zero_dim(G: Sequence[Polynomial], phi: Polynomial, S: Staircase | None = None,
                          seed: int = 0):
    """LEX basis of <G> : phi for zero-dimensional <G>, working on its full staircase."""
    G = drl_basis(G)
    ring = G[0].ring
    red = Reducer(G)
    phi = red.normal_form(phi.reorder(ring))
    if not phi:
        raise ColonError("phi lies in the ideal")
    M = build_mult_matrix(G, S)
    S = M.basis
    D, p = M.N, ring.p
    r = random_vector(D, p, seed)
    cs = [S.vector(phi, p)]
    cs += [S.vector(red.normal_form(ring.var(k) * phi), p) for k in range(ring.n - 1)]
    w = sequences(M, r, cs, D)
    h_n = berlekamp_massey(w[0], p)
    Dp = len(h_n) - 1
    shape = ShapeBasis(ring, h_n, [[] for _ in range(ring.n - 1)])
    if red.normal_form(shape.univariate(h_n) * phi):
        return Diagnostic.BAD_VECTOR
    try:
        shape.h = [_trim(hankel_solve(w[0][:2 * Dp - 1], w[k], Dp, p)) for k in range(1, ring.n)]
    except HankelSingularError:
        return Diagnostic.NOT_SHAPE_OR_BAD
    return _verify_exact(red, shape, phi) or shape


# -- Sigma machinery ---------------------------------------------------------

class _Echelon:
    """Incremental linear independence test for sparse polynomials."""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.key = ring.order.key
        self.pivots: dict = {}

    def reduce(self, f: Polynomial) -> dict:
        p = self.ring.p
        key = self.key
        work = dict(f.to_dict())
        heap = [(tuple(-k for k in key(m)), m) for m in work]
        heapq.heapify(heap)
        out = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = work.pop(m, 0)
            if not c:
                continue
            piv = self.pivots.get(m)
            if piv is None:
                out[m] = c
                continue
            for pc, pm in piv.terms[1:]:
                if pm in work:
                    work[pm] = (work[pm] - c * pc) % p
                else:
                    work[pm] = (-c * pc) % p
                    heapq.heappush(heap, (tuple(-k for k in key(pm)), pm))
        return out

    def add(self, f: Polynomial) -> bool:
        """Insert f; False when f is a combination of the previous vectors."""
        rest = self.reduce(f)
        if not rest:
            return False
        g = self.ring.from_dict(rest).monic()
        self.pivots[g.lm] = g
        return True


def krylov_vectors(G: Sequence[Polynomial], phi: Polynomial, config: ColonConfig | None = None) -> list:
    """NF(x_n^i phi) for i = 0, 1, ... up to the first linearly dependent one (excluded)."""
    config = config or ColonConfig()
    G = drl_basis(G)
    ring = G[0].ring
    red = Reducer(G)
    v = red.normal_form(phi.reorder(ring))
    if not v:
        raise ColonError("phi lies in the ideal")
    xn = (0,) * (ring.n - 1) + (1,)
    ech = _Echelon(ring)
    out = []
    support: set = set()
    while ech.add(v):
        out.append(v)
        support.update(v.support())
        if len(out) > config.max_order or len(support) > config.max_sigma:
            raise ColonError(
                f"no relation among the first {len(out)} vectors NF(x_n^i phi) "
                f"(support {len(support)}): the colon ideal looks positive-dimensional")
        v = red.normal_form(v.mul_term(1, xn))
    return out


def build_sigma(G: Sequence[Polynomial], phi: Polynomial, config: ColonConfig | None = None) -> Staircase:
    """Divisor closure of the supports of NF(x_n^i phi), i < D'."""
    config = config or ColonConfig()
    mons = {m for v in krylov_vectors(G, phi, config) for m in v.support()}
    sigma = divisor_closure(mons)
    if len(sigma) > config.max_sigma:
        raise ColonError(f"Sigma exceeds {config.max_sigma} monomials")
    return Staircase(sigma)


def reduce_sigma(sigma: Staircase, G: Sequence[Polynomial]) -> Staircase:
    """Drop sigma when some x_n^i sigma leaves Sigma while staying in the staircase."""
    lms = [g.lm for g in drl_basis(G)]
    keep = []
    for s in sigma:
        m = s
        while m in sigma:
            m = m[:-1] + (m[-1] + 1,)
        if any(mono_divides(lm, m) for lm in lms):
            keep.append(s)
    return Staircase(keep, closed=False)


@dataclass
class ColonContext:
    """Shared state of one spFGLMcol run (DRL ring, basis, matrix, random row)."""
    ring: PolyRing
    reducer: Reducer
    phi: Polynomial
    basis: Staircase
    M: SparseMultMatrix
    r: np.ndarray
    config: ColonConfig = field(default_factory=ColonConfig)
    iterates: RowIterates | None = None

    def __post_init__(self):
        if self.iterates is None:
            self.iterates = RowIterates(self.M, self.r)

    def vec(self, f: Polynomial) -> np.ndarray:
        return self.basis.vector(f, self.ring.p)

    def minimal_polynomial(self, c: np.ndarray, accept=None) -> tuple[list, list]:
        return online_minimal_polynomial(
            self.iterates.stream(c), self.ring.p, 2 * self.M.N,
            block=self.config.bm_block, accept=accept)

    def parametrization(self, w0: Sequence[int], c: np.ndarray, D: int) -> list:
        return _trim(hankel_solve(w0[:2 * D - 1], self.iterates.terms(c, D), D, self.ring.p))


def colon_context(G: Sequence[Polynomial], phi: Polynomial, seed: int = 0,
                  config: ColonConfig | None = None, use_reduced: bool | None = None) -> ColonContext:
    config = config or ColonConfig()
    G = drl_basis(G)
    ring = G[0].ring
    red = Reducer(G)
    phi = red.normal_form(phi.reorder(ring))
    if not phi:
        raise ColonError("phi lies in the ideal")
    sigma = build_sigma(G, phi, config)
    basis = sigma
    if config.reduce_sigma if use_reduced is None else use_reduced:
        pruned = reduce_sigma(sigma, G)
        # pruning may remove all of phi; keeping Sigma is always sound
        if len(pruned) and pruned.vector(phi, ring.p).any():
            basis = pruned
    M = build_projected_matrix(G, basis)
    log.debug("Sigma: %d monomials, basis used: %d, %d nontrivial normal forms",
              len(sigma), len(basis), M.nf_count)
    return ColonContext(ring, red, phi, basis, M, random_vector(len(basis), ring.p, seed), config)


def eliminant(ctx: ColonContext) -> tuple[list, list]:
    """h_n and the terms of r M^i phi it was read from."""
    red, phi = ctx.reducer, ctx.phi
    ring = ctx.ring
    n = ring.n

    def accept(poly):
        h = ring.from_dict({(0,) * (n - 1) + (i,): c for i, c in enumerate(poly)})
        return not red.normal_form(h * phi)

    return ctx.minimal_polynomial(ctx.vec(phi), accept)


def lambda_shift_check(ctx: ColonContext, k: int, lam: int, h_k: Sequence[int]) -> bool:
    """Recompute h_k through I : phi(x_k + lam) and compare.

    For generic lam the colon ideal is unchanged, so a correct h_k is
    reproduced; ``k`` is the 0-based index of the variable.
    """
    p = ctx.ring.p
    x_k = ctx.ring.var(k)
    psi = ctx.vec(ctx.reducer.normal_form(x_k * ctx.phi))
    psi2 = ctx.vec(ctx.reducer.normal_form(x_k * x_k * ctx.phi))
    phi_vec = ctx.vec(ctx.phi)
    c0 = (psi + lam * phi_vec) % p
    ck = (psi2 + lam * psi) % p
    poly, w0 = ctx.minimal_polynomial(c0)
    D = len(poly) - 1
    try:
        other = ctx.parametrization(w0, ck, D)
    except HankelSingularError:
        return False
    return other == _trim(h_k)


def spfglm_col(G: Sequence[Polynomial], phi: Polynomial, seed: int = 0,
               config: ColonConfig | None = None):
    """LEX basis of the zero-dimensional colon ideal <G> : phi in shape position.

    ``G`` is the reduced DRL basis of I, which may be positive-dimensional.
    Returns a ShapeBasis or a Diagnostic.
    """
    config = config or ColonConfig()
    ctx = colon_context(G, phi, seed, config)
    ring = ctx.ring
    result = Diagnostic.BAD_VECTOR
    for attempt in range(config.retries + 1):
        if attempt:
            ctx = ColonContext(ring, ctx.reducer, ctx.phi, ctx.basis, ctx.M,
                               random_vector(ctx.M.N, ring.p, seed + attempt), config)
        h_n, w0 = eliminant(ctx)
        D = len(h_n) - 1
        shape = ShapeBasis(ring, h_n, [[] for _ in range(ring.n - 1)])
        if ctx.reducer.normal_form(shape.univariate(h_n) * ctx.phi):
            log.debug("attempt %d: bad random vector", attempt)
            continue
        try:
            shape.h = [ctx.parametrization(w0, ctx.vec(ctx.reducer.normal_form(ring.var(k) * ctx.phi)), D)
                       for k in range(ring.n - 1)]
        except HankelSingularError:
            return Diagnostic.NOT_SHAPE_OR_BAD
        if config.fast_verify:
            rng = np.random.default_rng(seed + 7919 * (attempt + 1))
            for k in range(ring.n - 1):
                lam = int(rng.integers(1, ring.p))
                if not lambda_shift_check(ctx, k, lam, shape.h[k]):
                    return Diagnostic.NOT_SHAPE
            return shape
        return _verify_exact(ctx.reducer, shape, ctx.phi) or shape
    return result
