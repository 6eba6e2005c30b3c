from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gwa.coefficients import (
    QQ,
    Cyclotomic,
    CyclotomicField,
    cyclotomic_polynomial,
    field_arith,
    format_rational,
    parse_rational,
    root_of_unity,
)
from gwa.errors import DivisionByZero, FieldMismatch

from strategies import fractions


def test_rational_sum():
    assert field_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)


def test_zeta4_squared_is_minus_one():
    z = root_of_unity(4, 1)
    assert field_arith(z, z, "mul") == -1


def test_phi3_relation():
    z = root_of_unity(3, 1)
    assert z * z + z + 1 == 0


@pytest.mark.parametrize("m,k,expected", [(2, 1, -1), (4, 2, -1), (3, 3, 1)])
def test_root_of_unity_examples(m, k, expected):
    assert root_of_unity(m, k) == expected


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        field_arith(Fraction(1), Fraction(0), "div")
    with pytest.raises(DivisionByZero):
        root_of_unity(5, 1) / Cyclotomic(5, [0])


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        field_arith(root_of_unity(3, 1), root_of_unity(4, 1), "add")


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("m", range(1, 13))
def test_roots_have_order_dividing_m(m):
    for k in range(1, m + 1):
        z = root_of_unity(m, k)
        assert z**m == 1
        order = next(d for d in range(1, m + 1) if z**d == 1)
        assert order == m // gcd(m, k)


def test_canonical_zero_is_structural():
    z = root_of_unity(8, 3) + Fraction(2, 7)
    diff = z - z
    assert diff.coeffs == tuple(Fraction(0) for _ in diff.coeffs)
    assert not diff


def test_rational_cyclotomic_matches_fraction():
    c = CyclotomicField(5).convert(Fraction(3, 4))
    assert c == Fraction(3, 4)
    assert hash(c) == hash(Fraction(3, 4))


def test_text_forms():
    assert str(root_of_unity(8, 2) + 1) == "z^2+1 (m=8)"
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert parse_rational(" -4/6 ") == Fraction(-2, 3)


def test_field_descriptors():
    F = CyclotomicField(6)
    assert F.contains_roots(3) and F.contains_roots(2) and not F.contains_roots(4)
    assert CyclotomicField(3).contains_roots(6)
    assert CyclotomicField(3).root(6, 1) ** 6 == 1
    assert QQ.contains_roots(2) and not QQ.contains_roots(3)


coeff_vectors = st.lists(fractions, min_size=4, max_size=4)


@given(coeff_vectors, coeff_vectors, coeff_vectors)
def test_field_axioms_q_zeta5(a, b, c):
    x, y, w = (Cyclotomic(5, v) for v in (a, b, c))
    assert (x + y) + w == x + (y + w)
    assert (x * y) * w == x * (y * w)
    assert x * (y + w) == x * y + x * w
    if x:
        assert x * x.inverse() == 1


@given(st.lists(fractions, min_size=2, max_size=2))
def test_inverse_q_zeta6(v):
    x = Cyclotomic(6, v)
    if x:
        assert (x / x) == 1
