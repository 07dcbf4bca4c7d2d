"""Slow, independent reference computations used to check the fast paths."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .f4 import f4
from .fglm.matrix import full_staircase
from .linalg import left_kernel_triangular, rank, rref
from .ring import (
    DRL,
    LEX,
    Elim,
    GroebnerBasis,
    MonomialOrder,
    PolyRing,
    Polynomial,
    Reducer,
    dehomogenize,
    homogenize,
    monomials_up_to,
    permute_variables,
)


def _nonzero(F: Sequence[Polynomial]) -> list[Polynomial]:
    return [f for f in F if f]


def saturate_rabinowitsch(F: Sequence[Polynomial], phi: Polynomial,
                          order: MonomialOrder = DRL) -> GroebnerBasis:
    """I : phi^inf as (I + <1 - t phi>) intersected with K[x], t eliminated first."""
    ring = phi.ring
    if not phi:
        return GroebnerBasis([ring.one().reorder(ring.with_order(order))], order, reduced=True)
    big = PolyRing(("_t",) + ring.names, ring.field, Elim(1))

    def lift(f):
        return big.from_dict({(0,) + m: c for c, m in f.terms})

    t = big.var(0)
    gens = [lift(f) for f in _nonzero(F)] + [big.one() - t * lift(phi)]
    G = f4(gens, Elim(1))
    target = ring.with_order(order)
    kept = [target.from_dict({m[1:]: c for c, m in g.terms}) for g in G if all(m[0] == 0 for _, m in g.terms)]
    if not kept:
        return GroebnerBasis([], order, reduced=True)
    return f4(kept, order)


def saturate_bayer(F: Sequence[Polynomial], order: MonomialOrder = DRL) -> GroebnerBasis:
    """I : x_n^inf by homogenizing, a DRL basis with x_n smallest, and dividing out x_n."""
    F = _nonzero(F)
    if not F:
        return GroebnerBasis([], order, reduced=True)
    ring = F[0].ring.with_order(DRL)
    n = ring.n
    H = homogenize([f.reorder(ring) for f in F], name="_h")
    # move the homogenizing variable to the front so that x_n is the smallest
    hring = PolyRing(("_h",) + ring.names, ring.field, DRL)
    perm = list(range(1, n + 1)) + [0]
    H = [permute_variables(h, hring, perm) for h in H]
    G = f4(H, DRL)
    stripped = []
    for g in G:
        e = min(m[n] for _, m in g.terms)
        stripped.append(hring.from_dict({m[:n] + (m[n] - e,): c for c, m in g.terms}))
    # back to (x_1, ..., x_n, _h) and set _h = 1
    tail = PolyRing(ring.names + ("_h",), ring.field, DRL)
    back = [n] + list(range(n))
    out = dehomogenize([permute_variables(g, tail, back) for g in stripped], ring)
    return f4(out, order)


def colon_brute_force(F: Sequence[Polynomial], phi: Polynomial, dmax: int,
                      order: MonomialOrder = DRL) -> list[Polynomial]:
    """Echelon basis of {h : deg h <= dmax, h phi in <F>}."""
    ring = phi.ring.with_order(order)
    G = f4([f.reorder(ring) for f in _nonzero(F)], order)
    phi = phi.reorder(ring)
    sigmas = sorted(monomials_up_to(ring.n, dmax), key=order.key)
    red = Reducer(G.generators) if G.generators else None
    rows = [red.normal_form(phi.mul_term(1, s)) if red else phi.mul_term(1, s) for s in sigmas]
    cols = sorted({m for r in rows for _, m in r.terms}, key=order.key, reverse=True)
    index = {m: k for k, m in enumerate(cols)}
    A = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, r in enumerate(rows):
        for c, m in r.terms:
            A[i, index[m]] = c
    kernel = left_kernel_triangular(A, ring.p)
    if not kernel:
        return []
    # rewrite the kernel vectors on monomial columns in decreasing order, then echelonize
    K = np.vstack(kernel)[:, ::-1]
    desc = sigmas[::-1]
    R, piv = rref(K, ring.p)
    out = []
    for r in R:
        out.append(ring.from_dict({desc[k]: int(r[k]) for k in np.flatnonzero(r)}))
    return out


def ideal_equal(G1: Sequence[Polynomial], G2: Sequence[Polynomial], order: MonomialOrder = DRL) -> bool:
    """Equality of ideals through their reduced Gröbner bases."""
    A = f4(_nonzero(G1), order).generators if _nonzero(G1) else []
    B = f4(_nonzero(G2), order).generators if _nonzero(G2) else []
    return set(A) == set(B)


def is_zero_dimensional(G: Sequence[Polynomial]) -> bool:
    """For a Gröbner basis: every variable has a pure power among the leading monomials."""
    G = _nonzero(G)
    if not G:
        return False
    n = G[0].ring.n
    seen = set()
    for g in G:
        nz = [k for k, e in enumerate(g.lm) if e]
        if not nz:
            return True
        if len(nz) == 1:
            seen.add(nz[0])
    return len(seen) == n


def staircase_of(G: Sequence[Polynomial]) -> list:
    """Full staircase of a zero-dimensional Gröbner basis, increasing."""
    return full_staircase(G).monomials


def certified_colon(F: Sequence[Polynomial], phi: Polynomial, dmax: int) -> GroebnerBasis | None:
    """Reduced DRL basis of <F> : phi, or None when the degree-dmax candidates do not certify it.

    J = <F> + <brute-force generators> always lies in the colon ideal. When J
    is zero-dimensional and the normal forms NF(tau phi) for tau in the
    staircase of J are independent, multiplication by phi is injective on
    K[x]/J, so J is the whole colon ideal.
    """
    ring = phi.ring.with_order(DRL)
    I = f4([f.reorder(ring) for f in _nonzero(F)], DRL)
    phi = phi.reorder(ring)
    gens = [f.reorder(ring) for f in _nonzero(F)] + colon_brute_force(F, phi, dmax)
    J = f4(gens, DRL)
    if not is_zero_dimensional(J.generators) or J.is_unit():
        return None
    red = Reducer(I.generators)
    taus = staircase_of(J.generators)
    rows = [red.normal_form(phi.mul_term(1, t)) for t in taus]
    cols = sorted({m for r in rows for _, m in r.terms}, key=DRL.key)
    index = {m: k for k, m in enumerate(cols)}
    A = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, r in enumerate(rows):
        for c, m in r.terms:
            A[i, index[m]] = c
    if rank(A, ring.p) != len(rows):
        return None
    return J


def is_shape_position(G_lex: Sequence[Polynomial]) -> bool:
    """Reduced LEX basis of the form {h_n(x_n), x_k - h_k(x_n)}."""
    G = _nonzero(G_lex)
    if not G:
        return False
    n = G[0].ring.n
    if len(G) != n:
        return False
    for g in G:
        nz = [k for k, e in enumerate(g.lm) if e]
        if len(nz) != 1:
            return False
    lead_vars = sorted(next(k for k, e in enumerate(g.lm) if e) for g in G)
    if lead_vars != list(range(n)):
        return False
    for g in G:
        k = next(i for i, e in enumerate(g.lm) if e)
        if k < n - 1 and g.lm[k] != 1:
            return False
        if any(any(m[:n - 1]) for _, m in g.terms[1:]):
            return False
    return True


def lex_basis(G: Sequence[Polynomial]) -> GroebnerBasis:
    ring = G[0].ring.with_order(LEX)
    return f4([g.reorder(ring) for g in G], LEX)
