from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import algebras, elements
from rbjordan.errors import DimensionMismatch, MixedFields, ParseError, UnsupportedField
from rbjordan.jordan import BilinearForm, CliffordAlgebra, bilinear, product, trace_norm
from rbjordan.scalars import FieldCtx

Z5, Z7, Q = FieldCtx.prime(5), FieldCtx.prime(7), FieldCtx.rationals()


def test_product_examples():
    alg = CliffordAlgebra.over(Z7, (-1, -1, -1))
    e1 = alg.basis(1)
    assert product(e1, e1) == alg.element(6)
    alg = CliffordAlgebra.over(Q, (3, 5))
    x = alg.one() + alg.basis(1)
    assert x * x == alg.element(4, (2, 0))
    y = alg.element(Fraction(1, 2), (7, -3))
    assert alg.one() * y == y


def test_bilinear_examples():
    f = BilinearForm(Z7, (-1, -1, -1))
    assert bilinear((1, 0, 0), (1, 0, 0), f) == 6
    assert bilinear((1, 0, 0), (0, 1, 0), f) == 0
    assert bilinear((1, 2), (2, 1), BilinearForm(Z5, (1, 1))) == 4
    with pytest.raises(DimensionMismatch):
        bilinear((1, 2), (1, 2, 3), BilinearForm(Z5, (1, 1)))


def test_trace_norm_examples():
    alg = CliffordAlgebra.over(Q, (3, 1))
    x = alg.element(2, (1, 0))
    t, n = trace_norm(x)
    assert (t, n) == (4, 1)
    # x^2 expanded by hand: (4 + 3) + 4 e_1
    assert x * x == alg.element(7, (4, 0))
    assert x * x == x.scale(t) - alg.one().scale(n)
    assert trace_norm(alg.one()) == (2, 1)
    assert trace_norm(alg.basis(1)) == (0, -3)


def test_invariants_enforced():
    with pytest.raises(ValueError):
        CliffordAlgebra.over(Z5, (1,))
    with pytest.raises(ValueError):
        CliffordAlgebra.over(Z5, (1, 0))
    with pytest.raises(UnsupportedField):
        CliffordAlgebra.over(FieldCtx.real(), (1, 1))
    with pytest.raises(ValueError):
        CliffordAlgebra.over(Z5, (1,) * 17)


def test_mixing_algebras_fails():
    a = CliffordAlgebra.over(Z5, (1, 1))
    b = CliffordAlgebra.over(Z5, (1, 1, 1))
    c = CliffordAlgebra.over(Z7, (1, 1))
    with pytest.raises(DimensionMismatch):
        product(a.one(), b.one())
    with pytest.raises(MixedFields):
        product(a.one(), c.one())
    with pytest.raises(DimensionMismatch):
        a.element(1, (1, 2, 3))


def test_element_text():
    alg = CliffordAlgebra.over(Q, (1, -2))
    x = alg.parse_element("1/2; 3,-1")
    assert x == alg.element(Fraction(1, 2), (3, -1))
    assert alg.parse_element(str(x)) == x
    with pytest.raises(ParseError):
        alg.parse_element("1; a,b")


def test_basis_products_commute():
    for alg in (CliffordAlgebra.over(Z7, (1, 3, 5)), CliffordAlgebra.over(Q, (2, -1))):
        basis = alg.basis_elements()
        for x in basis:
            for y in basis:
                assert x * y == y * x


@settings(max_examples=150)
@given(st.data())
def test_commutative_and_jordan(data):
    alg = data.draw(algebras())
    x, y = data.draw(elements(alg)), data.draw(elements(alg))
    assert x * y == y * x
    x2 = x * x
    assert (x2 * y) * x == x2 * (y * x)


@settings(max_examples=150)
@given(st.data())
def test_quadratic_relation(data):
    alg = data.draw(algebras())
    x = data.draw(elements(alg))
    t, n = trace_norm(x)
    assert (x * x - x.scale(t) + alg.one().scale(n)).is_zero()
    assert alg.one() * x == x
