"""Seeded random instance families shared by the test modules."""
from __future__ import annotations

import random

from gbsat.ring import FieldSpec, PolyRing, Polynomial, monomials_up_to

PRIMES = (7, 65521)


def ring_for(n: int, p: int) -> PolyRing:
    names = ("x", "y", "z")[:n]
    return PolyRing(names, FieldSpec(p))


def random_poly(ring: PolyRing, rng: random.Random, deg: int, nterms: int,
                min_deg: int = 0) -> Polynomial:
    mons = [m for m in monomials_up_to(ring.n, deg) if sum(m) >= min_deg]
    picks = rng.sample(mons, min(nterms, len(mons)))
    return ring.from_dict({m: rng.randrange(1, ring.p) for m in picks})


def random_nonconstant(ring, rng, deg, nterms):
    while True:
        f = random_poly(ring, rng, deg, nterms, min_deg=0)
        if f and f.degree() >= 1:
            return f


def gb_instance(seed: int):
    """n in {2,3}, degree <= 3, at most 4 generators, GF(7) or GF(65521)."""
    rng = random.Random(seed)
    ring = ring_for(rng.choice((2, 3)), rng.choice(PRIMES))
    count = rng.randint(1, min(4, ring.n + 1))
    F = [random_nonconstant(ring, rng, rng.randint(1, 3), rng.randint(2, 6))
         for _ in range(count)]
    return ring, F


def saturation_instance(seed: int):
    """Generators some of which carry a factor of phi, so the saturation is nontrivial."""
    rng = random.Random(10_000 + seed)
    ring = ring_for(rng.choice((2, 3)), rng.choice(PRIMES))
    phi = random_nonconstant(ring, rng, rng.randint(1, 2), rng.randint(1, 3))
    F = []
    for _ in range(rng.randint(ring.n - 1, ring.n)):
        g = random_nonconstant(ring, rng, rng.randint(1, 2), rng.randint(1, 4))
        r = rng.random()
        if r < 0.4:
            g = g * phi
        elif r < 0.55 and phi.degree() == 1:
            g = g * phi * phi
        F.append(g)
    return ring, F, phi


def bayer_instance(seed: int):
    """Generators with factors of the last variable, saturated by that variable."""
    rng = random.Random(20_000 + seed)
    ring = ring_for(rng.choice((2, 3)), rng.choice(PRIMES))
    xn = ring.var(ring.n - 1)
    F = []
    for _ in range(rng.randint(ring.n - 1, ring.n + 1)):
        g = random_nonconstant(ring, rng, rng.randint(1, 2), rng.randint(1, 3))
        if rng.random() < 0.5:
            g = g * xn ** rng.randint(1, 2)
        F.append(g)
    return ring, F, xn


def colon_instance(seed: int):
    """(ring, I generators, phi, expected colon generators J) with J in shape position.

    Either I = phi * J, which is positive-dimensional, or I = J * Q with Q
    the ideal of a point on V(phi), which is zero-dimensional.
    """
    rng = random.Random(30_000 + seed)
    n = rng.choice((2, 3))
    ring = ring_for(n, rng.choice((65521, 1073741827)))
    p = ring.p
    xn = ring.var(n - 1)
    Dp = rng.randint(1, 3)

    def univariate(deg, monic):
        coeffs = [rng.randrange(p) for _ in range(deg)] + ([1] if monic else [])
        return sum((xn ** i * c for i, c in enumerate(coeffs)), ring.zero())

    J = [univariate(Dp, True)] + [ring.var(k) - univariate(Dp, False) for k in range(n - 1)]
    phi = random_nonconstant(ring, rng, rng.randint(1, 2), rng.randint(1, 3))
    if rng.random() < 0.5:
        I = [phi * g for g in J]
        kind = "pos"
    else:
        pt = [rng.randrange(p) for _ in range(n)]
        value = sum(
            (c * eval_monomial(m, pt, p) for c, m in phi.terms), 0) % p
        phi = phi - ring.constant(value)
        Q = [ring.var(k) - ring.constant(pt[k]) for k in range(n)]
        I = [a * b for a in J for b in Q]
        kind = "zero"
    return ring, I, phi, J, kind


def eval_monomial(m, pt, p):
    out = 1
    for e, a in zip(m, pt):
        out = out * pow(a, e, p) % p
    return out
