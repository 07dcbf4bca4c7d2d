"""Cross-checks against SymPy's Gröbner bases, which share no code with gbsat."""
import pytest
from instances import gb_instance, saturation_instance

from gbsat.f4 import f4
from gbsat.f4sat import f4sat
from gbsat.ring import DRL

sympy = pytest.importorskip("sympy")


def to_sympy(f, syms):
    return sum(c * sympy.prod([s ** e for s, e in zip(syms, m)]) for c, m in f.terms)


def from_sympy(g, syms, ring):
    poly = sympy.Poly(g, *syms)
    return ring.from_dict({m: int(c) % ring.p for m, c in poly.terms()}).monic()


@pytest.mark.parametrize("seed", range(40))
def test_f4_matches_sympy(seed):
    ring, F = gb_instance(seed)
    syms = sympy.symbols(ring.names)
    G = sympy.groebner([to_sympy(f, syms) for f in F], *syms, modulus=ring.p, order="grevlex")
    drl = ring.with_order(DRL)
    assert set(f4(F, DRL).generators) == {from_sympy(g, syms, drl) for g in G.exprs}


@pytest.mark.parametrize("seed", range(20))
def test_f4sat_matches_sympy_rabinowitsch(seed):
    ring, F, phi = saturation_instance(seed)
    syms = sympy.symbols(ring.names)
    t = sympy.Symbol("_t")
    gens = [to_sympy(f, syms) for f in F if f] + [1 - t * to_sympy(phi, syms)]
    G = sympy.groebner(gens, t, *syms, modulus=ring.p, order="lex")
    kept = [g for g in G.exprs if t not in g.free_symbols]
    sat = sympy.groebner(kept, *syms, modulus=ring.p, order="grevlex") if kept else []
    drl = ring.with_order(DRL)
    theirs = {from_sympy(g, syms, drl) for g in (sat.exprs if kept else [])}
    assert set(f4sat(F, phi).generators) == theirs
