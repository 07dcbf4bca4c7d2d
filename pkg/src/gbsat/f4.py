"""Faugère's F4 with the degree selection strategy.

The engine keeps the basis ``G`` as a growing list (indices never move) and
the critical pairs ``P`` as a plain list. Every matrix is reduced to its
unique reduced row echelon form, which makes runs reproducible regardless
of pivot choices.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .linalg import rref
from .ring import (
    GroebnerBasis,
    MonomialOrder,
    Polynomial,
    Reducer,
    mono_div,
    mono_divides,
    mono_lcm,
    normal_form,
    spolynomial,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CriticalPair:
    i: int
    j: int
    lcm: tuple
    degree: int

    def sort_key(self, order: MonomialOrder):
        return (self.degree, order.key(self.lcm), self.i, self.j)


def make_pair(G: Sequence[Polynomial], i: int, j: int) -> CriticalPair:
    if i > j:
        i, j = j, i
    m = mono_lcm(G[i].lm, G[j].lm)
    return CriticalPair(i, j, m, sum(m))


def select_minimal_degree(P: Sequence[CriticalPair], order: MonomialOrder | None = None):
    """Split P into (all pairs of minimal degree, the rest)."""
    if not P:
        raise ValueError("no critical pair to select")
    d = min(pr.degree for pr in P)
    L = [pr for pr in P if pr.degree == d]
    rest = [pr for pr in P if pr.degree != d]
    if order is not None:
        L.sort(key=lambda pr: pr.sort_key(order))
    return L, rest


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def update_pairs(P: Sequence[CriticalPair], G: Sequence[Polynomial], h: Polynomial,
                 active: Sequence[bool] | None = None) -> list[CriticalPair]:
    """Gebauer-Möller update for adding h as generator number len(G).

    Pairs are dropped by the product criterion (coprime leading monomials)
    and by the chain criterion, both for the new pairs and the old ones.
    """
    t = len(G)
    lh = h.lm
    idx = [i for i in range(t) if active is None or active[i]]
    lcms = {i: mono_lcm(G[i].lm, lh) for i in idx}

    # new pairs: keep one pair per minimal lcm, unless a coprime pair has it
    C = list(idx)
    D = []
    while C:
        i = C.pop(0)
        m = lcms[i]
        if _coprime(G[i].lm, lh):
            D.append(i)
            continue
        if any(mono_divides(lcms[k], m) for k in C) or any(mono_divides(lcms[k], m) for k in D):
            continue
        D.append(i)
    new = [
        CriticalPair(i, t, lcms[i], sum(lcms[i]))
        for i in D if not _coprime(G[i].lm, lh)
    ]

    # old pairs: chain criterion through h
    kept = []
    for pr in P:
        m = pr.lcm
        if (
            mono_divides(lh, m)
            and mono_lcm(G[pr.i].lm, lh) != m
            and mono_lcm(G[pr.j].lm, lh) != m
        ):
            continue
        kept.append(pr)
    return kept + new


@dataclass
class MacaulayMatrix:
    columns: list                      # monomials, decreasing
    rows: list                         # Polynomials
    tags: list = field(default_factory=list)  # "spair" or "reducer"

    def dense(self) -> np.ndarray:
        index = {m: k for k, m in enumerate(self.columns)}
        A = np.zeros((len(self.rows), len(self.columns)), dtype=np.int64)
        for r, f in enumerate(self.rows):
            for c, m in f.terms:
                A[r, index[m]] = c
        return A


def symbolic_preprocessing(L: Sequence[CriticalPair], G: Sequence[Polynomial],
                           reducer: Reducer | None = None) -> MacaulayMatrix:
    if not L:
        return MacaulayMatrix([], [], [])
    ring = G[0].ring
    inv = ring.field.inv
    rows, tags = [], []
    seen = set()
    for pr in L:
        for k in (pr.i, pr.j):
            mult = mono_div(pr.lcm, G[k].lm)
            if (k, mult) in seen:
                continue
            seen.add((k, mult))
            rows.append(G[k].mul_term(inv(G[k].lc), mult))
            tags.append("spair")
    done = {f.lm for f in rows}
    mons = set(done)
    todo = []
    for f in rows:
        for _, m in f.terms:
            if m not in mons:
                mons.add(m)
                todo.append(m)
    if reducer is None:
        reducer = Reducer(G)
    while todo:
        m = todo.pop()
        done.add(m)
        i = reducer.find(m)
        if i is None:
            continue
        g = G[i]
        row = g.mul_term(reducer.lc_inv[i], mono_div(m, g.lm))
        rows.append(row)
        tags.append("reducer")
        for _, mm in row.terms:
            if mm not in mons:
                mons.add(mm)
                todo.append(mm)
    columns = sorted(mons, key=ring.order.key, reverse=True)
    return MacaulayMatrix(columns, rows, tags)


def linear_algebra(M: MacaulayMatrix) -> list[Polynomial]:
    """Rows of the reduced echelon form whose pivots are new.

    A pivot is old when it leads a reducer row or is shared by two input
    rows (the two halves of a critical pair). Anything left that is still
    divisible by some LM(G) is dropped by the driver.
    """
    if not M.rows:
        return []
    ring = M.rows[0].ring
    R, pivots = rref(M.dense(), ring.p)
    seen = Counter(f.lm for f in M.rows)
    input_lms = {f.lm for f, tag in zip(M.rows, M.tags) if tag == "reducer" or seen[f.lm] > 1}
    out = []
    for r, c in enumerate(pivots):
        if M.columns[c] in input_lms:
            continue
        nz = np.flatnonzero(R[r])
        terms = tuple((int(R[r, k]), M.columns[k]) for k in nz)
        out.append(Polynomial(ring, terms))
    return out


class F4Engine:
    """Mutable F4 state: basis G, pair list P."""

    def __init__(self, F: Sequence[Polynomial], order: MonomialOrder | None = None):
        F = [f for f in F if f]
        self.ring = None
        self.G: list[Polynomial] = []
        self.active: list[bool] = []
        self.P: list[CriticalPair] = []
        self.unit = False
        self.steps = 0
        if not F:
            return
        ring = F[0].ring if order is None else F[0].ring.with_order(order)
        self.ring = ring
        for f in F:
            self.add(f.reorder(ring))
            if self.unit:
                break

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def lm_reducible(self, m) -> bool:
        return any(a and mono_divides(g.lm, m) for g, a in zip(self.G, self.active))

    def add(self, h: Polynomial) -> None:
        h = h.monic()
        if not h:
            return
        if h.is_constant():
            self.G = [h]
            self.active = [True]
            self.P = []
            self.unit = True
            return
        self.P = update_pairs(self.P, self.G, h, self.active)
        lh = h.lm
        for k, g in enumerate(self.G):
            if self.active[k] and mono_divides(lh, g.lm):
                self.active[k] = False
        self.G.append(h)
        self.active.append(True)

    def next_degree(self) -> int | None:
        return min((pr.degree for pr in self.P), default=None)

    def step(self) -> list[Polynomial]:
        """One round: all pairs of minimal degree. Returns the added polynomials."""
        L, self.P = select_minimal_degree(self.P, self.order)
        M = symbolic_preprocessing(L, self.G)
        new = linear_algebra(M)
        self.steps += 1
        added = []
        lms_before = [g.lm for g, a in zip(self.G, self.active) if a]
        for h in new:
            if any(mono_divides(lm, h.lm) for lm in lms_before):
                continue
            self.add(h)
            added.append(h)
            if self.unit:
                break
        log.debug("F4 step %d: %d pairs, %dx%d matrix, %d new",
                  self.steps, len(L), len(M.rows), len(M.columns), len(added))
        return added

    def run(self, max_degree: int | None = None) -> None:
        while self.P and not self.unit:
            if max_degree is not None and self.next_degree() > max_degree:
                break
            self.step()

    def basis(self) -> list[Polynomial]:
        return list(self.G)


def reduce_basis(G: Sequence[Polynomial], order: MonomialOrder | None = None) -> GroebnerBasis:
    """Minimalize and interreduce; the result is the reduced basis when G is a GB."""
    G = [g for g in G if g]
    if not G:
        return GroebnerBasis([], order, reduced=True)
    ring = G[0].ring if order is None else G[0].ring.with_order(order)
    G = [g.reorder(ring).monic() for g in G]
    if any(g.is_constant() for g in G):
        return GroebnerBasis([ring.one()], ring.order, reduced=True)
    key = ring.order.key
    G.sort(key=lambda g: key(g.lm))
    minimal = []
    for g in G:
        if not any(mono_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        if others:
            tail = Polynomial(ring, g.terms[1:])
            g = Polynomial(ring, (g.terms[0],)) + normal_form(tail, others)
        out.append(g)
    out.sort(key=lambda g: key(g.lm))
    return GroebnerBasis(out, ring.order, reduced=True)


def f4(F: Sequence[Polynomial], order: MonomialOrder | None = None, reduce: bool = True,
       max_degree: int | None = None) -> GroebnerBasis:
    """Gröbner basis of <F>.

    With ``max_degree`` the run stops before the first pair of larger
    degree; the basis is then only truncated and is returned unreduced.
    """
    engine = F4Engine(F, order)
    if engine.ring is None:
        return GroebnerBasis([], order or (F[0].ring.order if F else None), reduced=True)
    engine.run(max_degree)
    if reduce and max_degree is None:
        return reduce_basis(engine.G, engine.order)
    G = [g for g, a in zip(engine.G, engine.active) if a] if max_degree is None else engine.G
    return GroebnerBasis(G, engine.order, reduced=False)


def buchberger_check(G: Sequence[Polynomial], order: MonomialOrder | None = None) -> bool:
    """True iff every S-polynomial of G reduces to zero modulo G."""
    G = [g for g in G if g]
    if not G:
        return True
    if order is not None:
        ring = G[0].ring.with_order(order)
        G = [g.reorder(ring) for g in G]
    red = Reducer(G)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if red.normal_form(spolynomial(G[i], G[j])):
                return False
    return True
