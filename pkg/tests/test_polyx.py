from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import qrats, small_fractions
from qumbral.cfactorial import c_power_of_sum, get_cseq
from qumbral.exactnum import Q, QRat
from qumbral.formats import parse_polynomial
from qumbral.polyx import (
    XPoly,
    XYPoly,
    c_substitute,
    format_xpoly,
    leading_coeff,
    xpoly_eval,
)

xpolys = st.lists(qrats, max_size=4).map(XPoly)
frac_xpolys = st.lists(small_fractions, max_size=5).map(XPoly)


def test_monomial_and_degree():
    p = XPoly.monomial(3, Q)
    assert p.degree == 3
    assert p.coeff(3) == Q
    assert p.coeff(7) == 0
    assert XPoly().degree == float("-inf")


def test_leading_coeff():
    assert leading_coeff(XPoly([1, 0, Q])) == (2, Q)
    with pytest.raises(ValueError):
        leading_coeff(XPoly())


def test_eval_at_symbolic_point():
    p = XPoly([1, 2, 3])
    assert xpoly_eval(p, Q) == 1 + 2 * Q + 3 * Q**2
    assert p(Fraction(1, 2)) == Fraction(11, 4)


def test_outer_and_at_y():
    b = XYPoly.outer(XPoly([0, 1]), XPoly([1, 1]))  # x (1 + y)
    assert b.coeff(1, 0) == 1 and b.coeff(1, 1) == 1
    assert b.at_y(2) == XPoly([0, 3])


def test_c_substitute_of_monomial_is_power_of_sum():
    cs = get_cseq()
    for n in range(6):
        assert c_substitute(XPoly.monomial(n), cs) == c_power_of_sum(n, cs)


def test_c_substitute_at_y_zero_is_identity():
    p = XPoly([Q, 1 - Q, 3, Fraction(1, 7)])
    assert c_substitute(p).at_y(0) == p


def test_power_of_sum_classical():
    one = get_cseq(1)
    s = c_power_of_sum(3, one)
    assert [s.coeff(k, 3 - k) for k in range(4)] == [1, 3, 3, 1]


@given(xpolys, xpolys, xpolys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a) == XPoly()


@given(frac_xpolys, frac_xpolys, small_fractions)
def test_evaluation_homomorphism(a, b, x0):
    assert (a * b)(x0) == a(x0) * b(x0)
    assert (a + b)(x0) == a(x0) + b(x0)


@given(xpolys)
def test_text_rendering_roundtrips(p):
    assert parse_polynomial(format_xpoly(p)) == p


@given(xpolys, xpolys)
def test_c_substitute_is_linear(a, b):
    assert c_substitute(a + b) == c_substitute(a) + c_substitute(b)


def test_xypoly_equality_ignores_zero_terms():
    assert XYPoly({(1, 1): 0}) == XYPoly()
    assert XYPoly({(0, 0): QRat(2)}) == XYPoly({(0, 0): 2})
