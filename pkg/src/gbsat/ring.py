"""Exact polynomial arithmetic over prime fields.

Monomials are plain tuples of non-negative exponents. A :class:`Polynomial`
keeps its terms as ``(coefficient, monomial)`` pairs sorted decreasingly for
the monomial order of its :class:`PolyRing`; coefficients are canonical
representatives in ``[1, p)``.

Variables follow the convention ``x_n < ... < x_1``: position 0 in an
exponent tuple is the largest variable.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

DEFAULT_PRIME = 1073741827

Monomial = tuple


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3 215 031 751."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field Z/pZ with p < 2^31."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p >= 2**31 or not is_prime(self.p):
            raise ValueError(f"characteristic {self.p!r} is not a prime below 2^31")

    def __call__(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return pow(a, -1, self.p)

    def signed(self, a: int) -> int:
        """Symmetric representative in (-p/2, p/2]."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a


# -- monomials ---------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for cut in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        exps = []
        for c in cut:
            exps.append(c - prev - 1)
            prev = c
        exps.append(d + n - 1 - prev - 1)
        out.append(tuple(exps))
    return out


def monomials_up_to(n: int, d: int) -> list[Monomial]:
    out = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(n, k))
    return out


# -- orders ------------------------------------------------------------------

def _drl_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


@dataclass(frozen=True)
class MonomialOrder:
    """DRL, LEX, or an elimination order.

    ``elim`` with ``block=k`` compares the first k variables by DRL and
    breaks ties with DRL on the remaining ones.
    """

    kind: str = "drl"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("drl", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs a block of at least one variable")

    @property
    def is_graded(self) -> bool:
        return self.kind == "drl"

    def key(self, m: Monomial) -> tuple:
        """Sort key: a larger key is a larger monomial."""
        if self.kind == "drl":
            return _drl_key(m)
        if self.kind == "lex":
            return tuple(m)
        k = self.block
        return _drl_key(m[:k]) + _drl_key(m[k:])

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind


DRL = MonomialOrder("drl")
LEX = MonomialOrder("lex")


def Elim(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as m1 is smaller than, equal to or larger than m2."""
    if len(m1) != len(m2):
        raise ValueError(f"monomials live in different rings: {m1} vs {m2}")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


# -- rings and polynomials ---------------------------------------------------

@dataclass(frozen=True)
class PolyRing:
    names: tuple
    field: FieldSpec = field(default_factory=FieldSpec)
    order: MonomialOrder = DRL

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def p(self) -> int:
        return self.field.p

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.names, self.field, order)

    def one_monomial(self) -> Monomial:
        return (0,) * self.n

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def constant(self, c: int) -> "Polynomial":
        c %= self.p
        return Polynomial(self, ((c, self.one_monomial()),) if c else ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def var(self, i: int) -> "Polynomial":
        m = [0] * self.n
        m[i] = 1
        return Polynomial(self, ((1, tuple(m)),))

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.n)]

    def monomial(self, m: Monomial, c: int = 1) -> "Polynomial":
        c %= self.p
        return Polynomial(self, ((c, tuple(m)),) if c else ())

    def from_dict(self, d: dict) -> "Polynomial":
        p = self.p
        key = self.order.key
        items = [(c % p, m) for m, c in d.items() if c % p]
        items.sort(key=lambda t: key(t[1]), reverse=True)
        return Polynomial(self, tuple(items))

    def sort_monomials(self, mons: Iterable[Monomial], reverse: bool = False) -> list:
        return sorted(mons, key=self.order.key, reverse=reverse)

    def fmt_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial; ``terms[0]`` is the leading term."""

    __slots__ = ("ring", "terms", "_dict")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms
        self._dict = None

    # basic accessors
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> Monomial:
        return self.terms[0][1]

    @property
    def lc(self) -> int:
        return self.terms[0][0]

    @property
    def lt(self) -> tuple:
        return self.terms[0]

    def degree(self) -> int:
        return max((sum(m) for _, m in self.terms), default=-1)

    def support(self) -> list[Monomial]:
        return [m for _, m in self.terms]

    def to_dict(self) -> dict:
        if self._dict is None:
            self._dict = {m: c for c, m in self.terms}
        return self._dict

    def coefficient(self, m: Monomial) -> int:
        return self.to_dict().get(tuple(m), 0)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][1]))

    def is_homogeneous(self) -> bool:
        return len({sum(m) for _, m in self.terms}) <= 1

    # arithmetic
    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        p = self.ring.p
        d = dict(self.to_dict())
        for c, m in other.terms:
            v = (d.get(m, 0) + sign * c) % p
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return self.ring.from_dict(d)

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, tuple((p - c, m) for c, m in self.terms))

    def scale(self, a: int) -> "Polynomial":
        p = self.ring.p
        a %= p
        if not a:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((c * a % p, m) for c, m in self.terms))

    def mul_term(self, a: int, mono: Monomial) -> "Polynomial":
        """Multiply by the term a*mono; order is preserved, no re-sort needed."""
        p = self.ring.p
        a %= p
        if not a:
            return self.ring.zero()
        return Polynomial(
            self.ring, tuple((c * a % p, mono_mul(m, mono)) for c, m in self.terms)
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        p = self.ring.p
        d: dict = {}
        for c1, m1 in self.terms:
            for c2, m2 in other.terms:
                m = mono_mul(m1, m2)
                d[m] = (d.get(m, 0) + c1 * c2) % p
        return self.ring.from_dict(d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self) -> "Polynomial":
        if not self.terms or self.lc == 1:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def reorder(self, ring: PolyRing) -> "Polynomial":
        """Re-express in a ring with the same variables but another order."""
        if ring.n != self.ring.n or ring.p != self.ring.p:
            raise ValueError("reorder needs the same variables and field")
        if ring.order == self.ring.order:
            return Polynomial(ring, self.terms)
        return ring.from_dict(self.to_dict())

    # comparison and display
    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.ring.p == other.ring.p
            and self.ring.n == other.ring.n
            and self.to_dict() == other.to_dict()
        )

    def __hash__(self):
        return hash(frozenset(self.to_dict().items()))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        fld = self.ring.field
        for c, m in self.terms:
            c = fld.signed(c)
            mono = self.ring.fmt_monomial(m)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += sign + body
        return s

    def __repr__(self):
        return f"Polynomial({self})"


@dataclass
class GroebnerBasis:
    generators: list
    order: MonomialOrder
    reduced: bool = False

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def leading_monomials(self) -> list[Monomial]:
        return [g.lm for g in self.generators]

    def max_degree(self) -> int:
        return max((g.degree() for g in self.generators), default=-1)

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant() and bool(
            self.generators[0]
        )

    def in_staircase(self, m: Monomial) -> bool:
        return not any(mono_divides(lm, m) for lm in self.leading_monomials())


# -- division ----------------------------------------------------------------

class Reducer:
    """Division data for a fixed list G, reused across many normal forms."""

    def __init__(self, G: Sequence[Polynomial]):
        G = [g for g in G if g]
        if not G:
            raise ValueError("cannot reduce modulo an empty list")
        self.polys = G
        self.ring = G[0].ring
        self.lms = [g.lm for g in G]
        inv = self.ring.field.inv
        self.lc_inv = [inv(g.lc) for g in G]

    def find(self, m: Monomial):
        """Index of the first generator whose leading monomial divides m."""
        for i, lm in enumerate(self.lms):
            for x, y in zip(m, lm):
                if y > x:
                    break
            else:
                return i
        return None

    def normal_form(self, f: Polynomial) -> Polynomial:
        """Fully reduce f, always treating the largest reducible monomial next."""
        ring = self.ring
        if not f.terms:
            return ring.zero()
        if f.ring.order != ring.order:
            f = f.reorder(ring)
        p = ring.p
        key = ring.order.key
        work = dict(f.to_dict())
        heap = [(tuple(-k for k in key(m)), m) for m in work]
        heapq.heapify(heap)
        out = []
        find = self.find
        while heap:
            _, m = heapq.heappop(heap)
            c = work.pop(m)
            if not c:
                continue
            i = find(m)
            if i is None:
                out.append((c, m))
                continue
            g = self.polys[i]
            q = tuple(x - y for x, y in zip(m, self.lms[i]))
            factor = c * self.lc_inv[i] % p
            for gc, gm in g.terms[1:]:
                mm = tuple(x + y for x, y in zip(gm, q))
                if mm in work:
                    work[mm] = (work[mm] - factor * gc) % p
                else:
                    work[mm] = (-factor * gc) % p
                    heapq.heappush(heap, (tuple(-k for k in key(mm)), mm))
        # pops come out in decreasing order, so `out` is already sorted
        return Polynomial(ring, tuple(out))


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of f by G, reducing the largest reducible monomial first.

    Ties between several possible reducers go to the smallest index in G.
    """
    if order is not None and f.ring.order != order:
        f = f.reorder(f.ring.with_order(order))
        G = [g.reorder(f.ring) for g in G]
    if not f:
        return f
    return Reducer(G).normal_form(f)


def spolynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    if f.ring.order != g.ring.order:
        raise ValueError("S-polynomial of polynomials under different orders")
    fld = f.ring.field
    m = mono_lcm(f.lm, g.lm)
    a = f.mul_term(fld.inv(f.lc), mono_div(m, f.lm))
    b = g.mul_term(fld.inv(g.lc), mono_div(m, g.lm))
    return a - b


def staircase_monomials(lms: Sequence[Monomial], n: int, dmax: int, order: MonomialOrder) -> list:
    """Monomials of degree <= dmax outside <lms>, sorted increasingly."""
    out = [
        m for m in monomials_up_to(n, dmax)
        if not any(mono_divides(lm, m) for lm in lms)
    ]
    out.sort(key=order.key)
    return out


def divisor_closure(mons: Iterable[Monomial]) -> set:
    """All divisors of the given monomials (including themselves)."""
    out = set()
    for m in mons:
        for e in itertools.product(*(range(k + 1) for k in m)):
            out.add(e)
    return out


# -- homogenization ----------------------------------------------------------

def homogenize(F: Sequence[Polynomial], name: str = "x0") -> list[Polynomial]:
    """Homogenize with a fresh variable appended as the smallest one."""
    if not F:
        return []
    ring = F[0].ring
    hring = PolyRing(ring.names + (name,), ring.field, ring.order)
    out = []
    for f in F:
        d = f.degree()
        out.append(hring.from_dict({m + (d - sum(m),): c for c, m in f.terms}))
    return out


def dehomogenize(F: Sequence[Polynomial], ring: PolyRing | None = None) -> list[Polynomial]:
    """Set the last variable to 1."""
    if not F:
        return []
    hring = F[0].ring
    if ring is None:
        ring = PolyRing(hring.names[:-1], hring.field, hring.order)
    p = ring.p
    out = []
    for f in F:
        d: dict = {}
        for c, m in f.terms:
            mm = m[:-1]
            d[mm] = (d.get(mm, 0) + c) % p
        out.append(ring.from_dict(d))
    return out


def permute_variables(f: Polynomial, ring: PolyRing, perm: Sequence[int]) -> Polynomial:
    """Move variable i of f.ring to position perm[i] of ring."""
    d = {}
    for c, m in f.terms:
        mm = [0] * ring.n
        for i, e in enumerate(m):
            mm[perm[i]] += e
        d[tuple(mm)] = c
    return ring.from_dict(d)
