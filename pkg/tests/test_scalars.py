import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hopfconst.errors import FieldMismatchError, ParseError
from hopfconst.scalars import (
    QQ,
    CyclotomicField,
    PrimeField,
    cyclotomic_polynomial,
    field_from_text,
    root_of_unity,
    scalar_sqrt,
)
from oracles import random_scalar

FIELDS = [QQ, PrimeField(5), PrimeField(7), CyclotomicField(3), CyclotomicField(8), CyclotomicField(12)]


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_field_axioms_random_triples(field):
    rng = random.Random(1234)
    zero, one = field.zero, field.one
    for _ in range(10_000):
        a, b, c = (random_scalar(field, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b * c) == (a * b) * c
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert a + zero == a and a * one == a
        assert a - a == zero
        if a:
            assert a * a.inverse() == one
            assert (b / a) * a == b


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_polynomial_matches_sympy(n):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(n)) == [int(c) for c in expected]


@pytest.mark.parametrize("n", [3, 4, 5, 8, 9, 12])
def test_zeta_has_exact_order(n):
    F = CyclotomicField(n)
    z = F.zeta
    assert z ** n == 1
    assert all(z ** k != 1 for k in range(1, n))
    assert z ** -1 * z == 1


def test_root_of_unity_prime_field():
    F = PrimeField(13)
    w = root_of_unity(F, 1, 4)
    assert w ** 4 == 1 and w ** 2 != 1
    with pytest.raises(Exception):
        root_of_unity(F, 1, 5)


def test_text_round_trip():
    rng = random.Random(7)
    for field in FIELDS:
        for _ in range(200):
            a = random_scalar(field, rng)
            assert field.parse(a.to_text()) == a
            assert field_from_text(str(field)) == field


def test_parse_errors():
    with pytest.raises(ParseError):
        QQ.parse("1/0")
    with pytest.raises(ParseError):
        QQ.parse("abc")
    with pytest.raises(ParseError):
        PrimeField(5).parse("7")
    with pytest.raises(FieldMismatchError):
        CyclotomicField(8).parse("[1, 0] @ zeta(3)")


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldMismatchError):
        QQ(1) + CyclotomicField(3).zeta
    with pytest.raises(FieldMismatchError):
        PrimeField(5)(1) * PrimeField(7)(1)


def test_rational_mod_p():
    F = PrimeField(7)
    assert F(Fraction(1, 3)) * 3 == 1
    with pytest.raises(ZeroDivisionError):
        F(Fraction(1, 7))


@pytest.mark.parametrize(
    "field,value",
    [
        (QQ, Fraction(9, 4)),
        (CyclotomicField(8), 2),
        (CyclotomicField(8), -2),
        (CyclotomicField(8), Fraction(-1, 2)),
        (CyclotomicField(4), -1),
        (CyclotomicField(3), 4),
    ],
)
def test_sqrt_table_hits(field, value):
    a = field(value)
    r = scalar_sqrt(a)
    assert r is not None and r * r == a


def test_sqrt_of_root_of_unity_power():
    F = CyclotomicField(12)
    a = F.zeta ** 6 * 9
    r = scalar_sqrt(a)
    assert r * r == a


@pytest.mark.parametrize("field,value", [(QQ, 2), (QQ, -1), (CyclotomicField(3), 2), (CyclotomicField(4), 2)])
def test_sqrt_table_misses(field, value):
    assert scalar_sqrt(field(value)) is None


def test_sqrt_prime_field():
    F = PrimeField(11)
    squares = {(x * x) % 11 for x in range(11)}
    for v in range(11):
        r = scalar_sqrt(F(v))
        assert (r is not None) == (v in squares)
        if r is not None:
            assert r * r == F(v)


small = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=4, max_size=4), st.lists(small, min_size=4, max_size=4))
def test_q_zeta8_multiplication_matches_sympy(u, v):
    F = CyclotomicField(8)
    a, b = F.from_coefficients(u), F.from_coefficients(v)
    z = sympy.exp(sympy.I * sympy.pi / 4)
    val = lambda s: sum(sympy.Rational(c.numerator, c.denominator) * z ** k for k, c in enumerate(s.v))
    assert sympy.simplify(sympy.expand(val(a * b) - val(a) * val(b))) == 0
