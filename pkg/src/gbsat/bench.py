"""Sum-of-squares benchmark instances f = q_1^2 + ... + q_p^2.

Each q_j is a dense polynomial of degree d in x1..xn whose coefficients are
drawn uniformly from the nonzero residues, using numpy's PCG64 generator
seeded with the given 64-bit seed.
"""
from __future__ import annotations

import numpy as np

from .ring import DEFAULT_PRIME, FieldSpec, PolyRing, Polynomial, monomials_up_to

MAX_N = 5
MAX_D = 3
MAX_SQUARES = 8


def derivative(f: Polynomial, k: int) -> Polynomial:
    """Partial derivative with respect to variable k."""
    ring = f.ring
    d: dict = {}
    for c, m in f.terms:
        if m[k]:
            mm = m[:k] + (m[k] - 1,) + m[k + 1:]
            d[mm] = (d.get(mm, 0) + c * m[k]) % ring.p
    return ring.from_dict(d)


def random_dense(ring: PolyRing, d: int, rng: np.random.Generator) -> Polynomial:
    mons = monomials_up_to(ring.n, d)
    coeffs = rng.integers(1, ring.p, size=len(mons))
    return ring.from_dict({m: int(c) for m, c in zip(mons, coeffs)})


def sos_instance(n: int, d: int, p_count: int, seed: int, mode: str = "pos",
                 prime: int = DEFAULT_PRIME) -> tuple[PolyRing, list[Polynomial], Polynomial]:
    """Generators and phi of the SOS family.

    mode "pos": I = <df/dx_1, ..., df/dx_{n-1}> and phi = df/dx_n.
    mode "zero": additionally f itself is a generator.
    """
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must be in [2, {MAX_N}], got {n}")
    if not 1 <= d <= MAX_D:
        raise ValueError(f"d must be in [1, {MAX_D}], got {d}")
    if not 1 <= p_count <= MAX_SQUARES:
        raise ValueError(f"the number of squares must be in [1, {MAX_SQUARES}], got {p_count}")
    if not 0 <= seed < 2**64:
        raise ValueError("seed must fit in 64 bits")
    if mode not in ("pos", "zero"):
        raise ValueError(f"unknown mode {mode!r}")
    ring = PolyRing(tuple(f"x{i + 1}" for i in range(n)), FieldSpec(prime))
    rng = np.random.Generator(np.random.PCG64(seed))
    f = ring.zero()
    for _ in range(p_count):
        q = random_dense(ring, d, rng)
        f = f + q * q
    gens = [derivative(f, k) for k in range(n - 1)]
    if mode == "zero":
        gens = [f] + gens
    return ring, gens, derivative(f, n - 1)
