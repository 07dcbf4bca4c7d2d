"""F4 interleaved with saturation steps, computing a Gröbner basis of I : phi^inf.

Whenever F4 has produced new basis elements, the staircase of the current
basis is scanned: normal forms q_s = NF(s * phi) are stacked into a matrix
and every vanishing combination sum b_s q_s = 0 yields a polynomial
h = sum b_s s with h * phi in the current ideal.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .f4 import F4Engine, f4, reduce_basis
from .linalg import left_kernel_triangular
from .ring import (
    DRL,
    GroebnerBasis,
    MonomialOrder,
    Polynomial,
    Reducer,
    mono_divides,
    staircase_monomials as _staircase,
)

log = logging.getLogger(__name__)


@dataclass
class SaturationConfig:
    # saturation search fires after this many F4 steps that added elements
    steps_between: int = 3
    # intermediate searches only use monomials up to this fraction of max degree
    degree_fraction: Fraction = Fraction(2, 3)
    zero_dim_shortcut: bool = True
    # re-check NF(h * phi) = 0 for every h found while G is a Gröbner basis
    check: bool = False


def staircase_monomials(G: Sequence[Polynomial], dmax: int, order: MonomialOrder | None = None) -> list:
    G = [g for g in G if g]
    if not G:
        raise ValueError("staircase of an empty basis")
    order = order or G[0].ring.order
    return _staircase([g.lm for g in G], G[0].ring.n, dmax, order)


def left_kernel_lower_triangular(rows: Sequence[Polynomial], row_labels: Sequence) -> list[np.ndarray]:
    """Left kernel of the matrix whose i-th row holds the coefficients of rows[i].

    ``row_labels`` must be increasing; each returned vector ends with a 1 on
    its own label and is zero on every larger label.
    """
    if len(rows) != len(row_labels):
        raise ValueError("one label per row expected")
    if not rows:
        return []
    ring = next((r.ring for r in rows if r), None)
    if ring is None:
        p = 2
        cols = []
    else:
        p = ring.p
        cols = sorted({m for r in rows for _, m in r.terms}, key=ring.order.key, reverse=True)
    index = {m: k for k, m in enumerate(cols)}
    A = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, r in enumerate(rows):
        for c, m in r.terms:
            A[i, index[m]] = c
    if ring is None:
        return [np.eye(len(rows), dtype=np.int64)[i] for i in range(len(rows))]
    return left_kernel_triangular(A, p)


def zero_dim_shortcut(G: Sequence[Polynomial], phi: Polynomial, order: MonomialOrder | None = None) -> bool:
    """True when <G> + <phi> = <1>, i.e. <G> is already saturated by phi.

    Only attempted when every variable has a pure power among LM(G).
    """
    G = [g for g in G if g]
    if not G:
        return False
    n = G[0].ring.n
    pure = set()
    for g in G:
        nz = [k for k, e in enumerate(g.lm) if e]
        if len(nz) == 1:
            pure.add(nz[0])
        elif not nz:
            return True
    if len(pure) < n:
        return False
    return f4(list(G) + [phi], order).is_unit()


@dataclass
class _CacheEntry:
    q: Polynomial
    stamp: int


class F4Sat:
    """Driver state; ``run()`` returns the reduced basis of the saturation."""

    def __init__(self, F: Sequence[Polynomial], phi: Polynomial,
                 order: MonomialOrder | None = None, config: SaturationConfig | None = None):
        self.config = config or SaturationConfig()
        self.engine = F4Engine(F, order)
        self.order = order or (self.engine.order if self.engine.ring else phi.ring.order)
        if not self.order.is_graded and self.order.kind != "elim":
            raise ValueError("F4SAT needs a total degree order")
        ring = self.engine.ring or phi.ring.with_order(self.order)
        self.phi = phi.reorder(ring)
        self.nf_cache: dict = {}
        self.pending = 0
        self.saturation_passes = 0
        self.found: list[Polynomial] = []
        self.final_bound = None
        self.internal_max_degree = None
        self.phi_nf_degree = None

    # -- helpers
    def _active(self) -> list[Polynomial]:
        e = self.engine
        return [g for g, a in zip(e.G, e.active) if a]

    def _max_degree(self) -> int:
        return max(g.degree() for g in self._active())

    def _q(self, sigma, red: Reducer) -> Polynomial:
        stamp = len(self.engine.G)
        entry = self.nf_cache.get(sigma)
        if entry is not None:
            if entry.stamp < stamp:
                entry.q = red.normal_form(entry.q)
                entry.stamp = stamp
            return entry.q
        if not any(sigma):
            q = red.normal_form(self.phi)
        else:
            q = None
            for k, e in enumerate(sigma):
                if e:
                    tau = sigma[:k] + (e - 1,) + sigma[k + 1:]
                    if tau in self.nf_cache:
                        prev = self._q(tau, red)
                        step = tuple(int(i == k) for i in range(len(sigma)))
                        q = red.normal_form(prev.mul_term(1, step))
                        break
            if q is None:
                q = red.normal_form(self.phi.mul_term(1, sigma))
        self.nf_cache[sigma] = _CacheEntry(q, stamp)
        return q

    # -- the saturation step
    def saturation_step(self, dmax: int) -> list[Polynomial]:
        """Search h with supp h in the staircase (deg <= dmax) and h*phi in <G>."""
        G = self._active()
        ring = self.engine.ring
        red = Reducer(G)
        self.phi = red.normal_form(self.phi)
        self.saturation_passes += 1
        if not self.phi:
            return self._emit([ring.one()])
        sigmas = _staircase([g.lm for g in G], ring.n, dmax, self.order)
        if not sigmas:
            return []
        rows = [self._q(s, red) for s in sigmas]
        kernel = left_kernel_lower_triangular(rows, sigmas)
        cands = []
        for b in kernel:
            nz = np.flatnonzero(b)
            terms = tuple((int(b[k]), sigmas[k]) for k in reversed(nz))
            h = Polynomial(ring, terms)
            cands.append(h)
            if __debug__:
                relation = ring.zero()
                for k in nz:
                    relation = relation + rows[k].scale(int(b[k]))
                assert not relation, "kernel vector does not annihilate the q rows"
        log.debug("saturation pass %d: %d monomials (deg <= %d), %d kernel vectors",
                  self.saturation_passes, len(sigmas), dmax, len(kernel))
        return self._emit(cands)

    def _emit(self, cands: Sequence[Polynomial]) -> list[Polynomial]:
        lms = [g.lm for g in self._active()]
        emitted = []
        for h in cands:
            if any(mono_divides(m, h.lm) for m in lms):
                continue
            lms.append(h.lm)
            emitted.append(h)
        for h in emitted:
            self.engine.add(h)
            self.found.append(h)
            if self.engine.unit:
                break
        return emitted

    # -- main loop
    def run(self) -> GroebnerBasis:
        e = self.engine
        if not self.phi:
            ring = e.ring or self.phi.ring
            return GroebnerBasis([ring.one()], self.order, reduced=True)
        if e.ring is None:
            return GroebnerBasis([], self.order, reduced=True)
        cfg = self.config
        while not e.unit:
            while e.P and not e.unit:
                if e.step():
                    self.pending += 1
                if self.pending >= cfg.steps_between and e.P:
                    self.pending = 0
                    dmax = math.ceil(cfg.degree_fraction * self._max_degree())
                    self.saturation_step(dmax)
            if e.unit:
                break
            # P is empty: the active part of G is a Gröbner basis
            self.pending = 0
            G = self._active()
            self.phi = Reducer(G).normal_form(self.phi)
            self.internal_max_degree = self._max_degree()
            self.phi_nf_degree = self.phi.degree()
            self.final_bound = max(self.internal_max_degree, self.phi_nf_degree)
            if not self.phi:
                self._emit([e.ring.one()])
                break
            if cfg.zero_dim_shortcut and zero_dim_shortcut(G, self.phi, self.order):
                break
            new = self.saturation_step(self.final_bound)
            if cfg.check:
                red = Reducer(G)
                for h in new:
                    assert not red.normal_form(h * self.phi), "unsound saturation element"
            if not new:
                break
        return reduce_basis(e.G, self.order)


def f4sat(F: Sequence[Polynomial], phi: Polynomial, order: MonomialOrder | None = None,
          config: SaturationConfig | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of <F> : phi^inf for a total degree order (DRL by default)."""
    if order is None:
        order = F[0].ring.order if F and F[0].ring.order.is_graded else DRL
    return F4Sat(F, phi, order, config).run()
