import pytest

from conftest import polys, strs
from instances import gb_instance
from gbsat.f4 import (
    CriticalPair, F4Engine, MacaulayMatrix, buchberger_check, f4, linear_algebra, make_pair, reduce_basis,
    select_minimal_degree, symbolic_preprocessing, update_pairs,
)
from gbsat.ring import Reducer, mono_lcm, spolynomial


def pair(d, tag=0):
    return CriticalPair(tag, tag + 1, (d, 0), d)


def test_select_minimal_degree():
    P = [pair(3, 0), pair(5, 1), pair(3, 2)]
    L, rest = select_minimal_degree(P)
    assert [p.i for p in L] == [0, 2] and [p.i for p in rest] == [1]
    L, rest = select_minimal_degree([pair(4)])
    assert len(L) == 1 and rest == []
    L, rest = select_minimal_degree([pair(2, k) for k in range(3)])
    assert len(L) == 3 and rest == []
    with pytest.raises(ValueError):
        select_minimal_degree([])


def test_update_pairs_product_criterion(R7):
    G = polys(R7, "x^2")
    assert update_pairs([], G, polys(R7, "y^3")[0]) == []
    G = polys(R7, "x*y")
    (pr,) = update_pairs([], G, polys(R7, "y^2")[0])
    assert pr.lcm == (1, 2) and pr.degree == 3


def test_update_pairs_chain_criterion(R7):
    G = polys(R7, "x^2*y", "x*y^2")
    P = [make_pair(G, 0, 1)]
    new = update_pairs(P, G, polys(R7, "x*y")[0])
    assert sorted((p.i, p.j) for p in new) == [(0, 2), (1, 2)]


def test_symbolic_preprocessing_and_linear_algebra(R7):
    G = polys(R7, "x^2-y", "x*y-1")
    M = symbolic_preprocessing([make_pair(G, 0, 1)], G)
    assert M.columns == [(2, 1), (0, 2), (1, 0)]
    assert [str(r) for r in M.rows] == ["x^2*y-y^2", "x^2*y-x"]
    assert M.tags == ["spair", "spair"]
    assert [str(h) for h in linear_algebra(M)] == ["y^2-x"]
    assert symbolic_preprocessing([], G).rows == []


def test_symbolic_preprocessing_adds_reducers(R7):
    G = polys(R7, "x^2-y", "x*y-1", "y^2-x")
    M = symbolic_preprocessing([make_pair(G, 0, 2)], G)
    assert "reducer" in M.tags
    cols = set(M.columns)
    for r in M.rows:
        assert {m for _, m in r.terms} <= cols


def test_linear_algebra_edge_cases(R7):
    f, = polys(R7, "3*x^2+y")
    M = MacaulayMatrix([(2, 0), (0, 1)], [f, f.scale(2)], ["spair", "spair"])
    assert linear_algebra(M) == []
    M = MacaulayMatrix([(2, 0), (0, 1)], [f, f.scale(2)], ["spair", "reducer"])
    assert linear_algebra(M) == []
    M = MacaulayMatrix([(2, 0), (0, 1)], [f], ["spair"])
    assert linear_algebra(M) == [f.monic()]


def test_f4_examples(R7):
    G = f4(polys(R7, "x^2-y", "x*y-1"))
    assert strs(G) == ["x*y-1", "x^2-y", "y^2-x"]
    assert G.reduced and buchberger_check(G.generators)
    assert strs(f4(polys(R7, "1"))) == ["1"]
    assert strs(f4(polys(R7, "x^2", "(y-1)^2", "x*y-y-1"))) == ["1"]


def test_buchberger_check_examples(R7):
    assert buchberger_check(polys(R7, "x^2-y", "x*y-1", "y^2-x"))
    assert not buchberger_check(polys(R7, "x^2-y", "x*y-1"))
    assert buchberger_check(polys(R7, "x", "y"))


def test_reduce_basis_examples(R7):
    G = reduce_basis(polys(R7, "2*x^2-2*y", "x^2-y+x*y-1", "x*y-1"))
    assert strs(G) == ["x*y-1", "x^2-y"]
    again = reduce_basis(G.generators)
    assert again.generators == G.generators
    assert strs(reduce_basis(polys(R7, "3"))) == ["1"]


@pytest.mark.parametrize("seed", range(40))
def test_random_bases_are_groebner_and_contain_the_input(seed):
    ring, F = gb_instance(seed)
    G = f4(F)
    assert buchberger_check(G.generators)
    red = Reducer(G.generators)
    assert all(not red.normal_form(f) for f in F)
    # determinism: a second run prints the same bytes
    assert [str(g) for g in f4(F).generators] == [str(g) for g in G.generators]


@pytest.mark.parametrize("seed", range(20))
def test_truncated_run_closes_low_degree_pairs(seed):
    ring, F = gb_instance(seed)
    for d in (2, 3, 4):
        e = F4Engine(F)
        e.run(max_degree=d)
        if e.unit:
            continue
        G = [g for g, a in zip(e.G, e.active) if a]
        red = Reducer(G)
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                if sum(mono_lcm(G[i].lm, G[j].lm)) <= d:
                    assert not red.normal_form(spolynomial(G[i], G[j]))


@pytest.mark.parametrize("seed", range(20))
def test_pairs_dropped_by_the_criteria_are_redundant(seed):
    ring, F = gb_instance(seed)
    e = F4Engine(F)
    created, kept = set(), set()
    for k in range(len(e.G)):
        created.update((i, k) for i in range(k))
    kept.update((p.i, p.j) for p in e.P)
    while e.P and not e.unit:
        before = len(e.G)
        e.step()
        for k in range(before, len(e.G)):
            created.update((i, k) for i in range(k))
        kept.update((p.i, p.j) for p in e.P)
    if e.unit:
        return
    red = Reducer(reduce_basis(e.G).generators)
    for i, j in created - kept:
        assert not red.normal_form(spolynomial(e.G[i], e.G[j]))
