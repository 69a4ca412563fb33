import pytest
from fractions import Fraction
from hypothesis import assume, given, settings, strategies as st
from HoroCalc.qfun import InexactDivision, QPoly, QRat, eval_at_one, invert_variable, series_expand
from HoroCalc.errors import DivisionByZero, NotExpandable, PoleAtOne

q = QPoly.monomial(1)


def poly(*coeffs):
    return QPoly.from_coefficients(coeffs)


def test_canonical_form():
    a = QRat(poly(0, 0, 0, 0, 1, 1, 1) * 2, poly(1, 1) * 2)
    b = QRat(poly(0, 0, 0, 0, 1, 2, 2, 1), poly(1, 2, 1))
    assert a == b
    assert a.den == poly(1, 1)
    assert QRat(-1, -q) == QRat(1, q)
    assert QRat(poly(-1, 1), poly(1, -1)) == -1


def test_render():
    assert QRat(poly(0, 0, 0, 0, 1, 1, 1), poly(1, 1)).render() == "q^4*(q^2+q+1)/(q+1)"
    assert QRat(poly(0, 0, 0, 0, 0, 1, 0, 1)).render() == "q^5*(q^2+1)"
    assert QRat(poly(0, 0, 0, 0, 0, 1, 0, 1)).render('uv') == "(uv)^5*((uv)^2+1)"
    assert QRat(q ** 2 + q).render('L') == "L*(L+1)"
    assert poly(-1, 0, 3).render() == "3*q^2-1"
    assert QPoly.monomial(Fraction(-1, 2)).render() == "q^(-1/2)"
    assert QRat(0).render() == "0"


def test_fractional_exponents():
    half = QPoly.monomial(Fraction(1, 2))
    assert half * half == q
    assert (half + half).scale == 2
    assert (half * half).scale == 1
    assert QRat(1 - q, 1 - half) == 1 + half


def test_eval_at_one():
    assert QRat(poly(0, 0, 0, 0, 1, 1, 1), poly(1, 1)).eval_at_one() == Fraction(3, 2)
    assert eval_at_one(QRat(poly(-1, 0, 1), poly(-1, 1))) == 2
    third = QPoly.monomial(Fraction(1, 3))
    # (1 - q) / (1 - q^(1/3)) = 1 + q^(1/3) + q^(2/3)
    assert QRat(1 - q, 1 - third).eval_at_one() == 3
    with pytest.raises(PoleAtOne):
        QRat(1, 1 - q).eval_at_one()


def test_series_expand():
    inv = QPoly.monomial(-1)
    geometric = QRat(1, 1 - inv)
    assert series_expand(geometric, 3) == [(0, 1), (-1, 1), (-2, 1), (-3, 1)]
    square = QRat(1, (1 - QPoly.monomial(-2)) ** 2)
    assert square.series_expand(4) == [(0, 1), (-2, 2), (-4, 3)]
    assert QRat(QPoly.monomial(-5)).series_expand(3) == []
    with pytest.raises(NotExpandable):
        QRat(q).series_expand(2)


def test_division():
    with pytest.raises(DivisionByZero):
        QRat(1) / 0
    with pytest.raises(ZeroDivisionError):
        QRat(1, 0)
    with pytest.raises(InexactDivision):
        poly(1, 0, 1).divide_exact(poly(1, 1))
    assert poly(-1, 0, 1).divide_exact(poly(1, 1)) == poly(-1, 1)


def test_invert_variable():
    a = QRat(q ** 2, 1 - q)
    assert invert_variable(a) == QRat(QPoly.monomial(-2), 1 - QPoly.monomial(-1))
    assert a.invert_variable().invert_variable() == a


def test_to_json():
    a = QRat(poly(0, 0, 0, 0, 1, 1, 1), poly(1, 1))
    assert a.to_json() == {"scale": 1, "numerator": [[6, 1], [5, 1], [4, 1]],
                           "denominator": [[1, 1], [0, 1]]}


coefficients = st.lists(st.integers(min_value=-3, max_value=3), min_size=1, max_size=4)
polys = st.builds(lambda cs, shift: QPoly.from_coefficients(cs) * QPoly.monomial(shift),
                  coefficients, st.integers(min_value=-2, max_value=2))
rats = st.builds(QRat, polys, polys.filter(lambda p: not p.is_zero))


@settings(max_examples=30, deadline=None)
@given(rats, rats, rats)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    if not b.is_zero:
        assert (a * b) / b == a


@settings(max_examples=30, deadline=None)
@given(polys, polys)
def test_exact_division_inverts_product(a, b):
    assume(not b.is_zero)
    assert (a * b).divide_exact(b) == a


def in_inverse(cs):
    return QPoly.from_terms({-i: c for i, c in enumerate(cs)})


# leading exponent <= 0 and a nonzero constant term downstairs: expandable in q^-1
expandable = st.builds(lambda num, den: QRat(in_inverse(num), in_inverse(den)),
                       coefficients, coefficients.filter(lambda cs: cs[0] != 0))


def convolve(a, b, bound):
    out = {}
    for ea, ca in a:
        for eb, cb in b:
            if ea + eb >= -bound:
                out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return sorted(((e, c) for e, c in out.items() if c), reverse=True)


@settings(max_examples=30, deadline=None)
@given(expandable, expandable, st.integers(min_value=0, max_value=6))
def test_series_of_product_is_convolution(a, b, bound):
    assert series_expand(a * b, bound) == convolve(series_expand(a, bound), series_expand(b, bound), bound)
