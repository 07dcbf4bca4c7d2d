import pytest
from hypothesis import given, settings, strategies as st

from conftest import polys
from gbsat.f4 import f4
from gbsat.ring import (
    DRL, LEX, Elim, FieldSpec, PolyRing, Reducer, compare, dehomogenize, homogenize,
    is_prime, mono_mul, normal_form, spolynomial,
)


def test_field_rejects_composites_and_large_moduli():
    assert is_prime(1073741827) and is_prime(65521) and not is_prime(65535)
    with pytest.raises(ValueError):
        FieldSpec(6)
    with pytest.raises(ValueError):
        FieldSpec(2**31 + 11)


def test_compare_examples():
    assert compare((1, 0, 1), (0, 2, 0), DRL) == -1
    assert compare((1, 0), (0, 5), LEX) == 1
    assert compare((2, 3), (2, 3), DRL) == 0
    with pytest.raises(ValueError):
        compare((1, 0), (1, 0, 0), DRL)


def test_elimination_order_puts_the_first_block_first():
    # the t-block dominates regardless of the degree in the other variables
    assert compare((1, 0, 0), (0, 5, 5), Elim(1)) == 1
    assert compare((0, 2, 0), (0, 1, 1), Elim(1)) == 1


def test_normal_form_examples(R7):
    x2, xy, y2 = polys(R7, "x^2-y", "x*y-1", "y^2-x")
    assert str(normal_form(polys(R7, "x^2*y")[0], [x2])) == "y^2"
    assert str(normal_form(polys(R7, "x^2")[0], [x2, xy, y2])) == "y"
    assert not normal_form(x2, [x2])
    assert not normal_form(R7.zero(), [x2])


def test_spolynomial_examples(R7):
    f, g = polys(R7, "x^2-y", "x*y-1")
    assert str(spolynomial(f, g)) == "-y^2+x"
    assert not spolynomial(f, f)
    assert not spolynomial(*polys(R7, "x^2", "y^3"))
    with pytest.raises(ValueError):
        spolynomial(f, R7.zero())


def test_homogenize_round_trip(R7):
    F = polys(R7, "x^2-y", "3", "x*y^2+3*x-1")
    H = homogenize(F)
    assert [str(h) for h in H[:2]] == ["x^2-y*x0", "3"]
    assert all(h.is_homogeneous() for h in H)
    assert [h.degree() for h in H] == [f.degree() for f in F]
    assert dehomogenize(H) == F


def test_printing_uses_signed_coefficients(R7):
    assert str(polys(R7, "6*x+3*y^2")[0]) == "3*y^2-x"
    assert str(R7.zero()) == "0"


mono = st.tuples(*[st.integers(0, 4)] * 3)


@given(mono, mono, mono)
def test_orders_are_multiplicative(a, b, c):
    for order in (DRL, LEX, Elim(1)):
        if compare(a, b, order) < 0:
            assert compare(mono_mul(a, c), mono_mul(b, c), order) < 0


@given(mono)
def test_one_is_smallest(m):
    for order in (DRL, LEX):
        assert compare((0, 0, 0), m, order) <= 0


coeffs = st.dictionaries(mono, st.integers(0, 65520), max_size=6)
R = PolyRing(("x", "y", "z"), FieldSpec(65521))
GB = f4(polys(R, "x^2-y*z+1", "y^2-z-x", "x*y*z-2")).generators


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs, st.integers(0, 65520), st.integers(0, 65520))
def test_arithmetic_and_normal_form_properties(d1, d2, a, b):
    f, g = R.from_dict(d1), R.from_dict(d2)
    for h in (f + g, f - g, f * g, f.scale(a)):
        mons = [m for _, m in h.terms]
        assert all(c % R.p for c, _ in h.terms)
        assert all(R.order.key(mons[i]) > R.order.key(mons[i + 1]) for i in range(len(mons) - 1))
    red = Reducer(GB)
    nf = red.normal_form(f)
    assert red.normal_form(nf) == nf
    assert red.normal_form(f.scale(a) + g.scale(b)) == nf.scale(a) + red.normal_form(g).scale(b)
