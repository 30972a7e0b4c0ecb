from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SAMPLE_Q, small_fractions
from qumbral.cfactorial import get_cseq
from qumbral.exactnum import Q
from qumbral.families import generating_series, poly_of, sheffer_g
from qumbral.polyx import XPoly
from qumbral.series import TSeries, eq_exp_series, ts_mul
from qumbral.umbral import (
    Functional,
    apply_exp_y,
    apply_series,
    c_antiderivative,
    c_integral,
    conjugate_representation,
    d_cq,
    expand_in_sheffer_basis,
    pair,
    reconstruct,
    sheffer_generate,
)

cs = get_cseq()
FAMILIES = ("bernoulli", "euler", "genocchi")


def test_pairing_on_monomials():
    for k in range(5):
        for n in range(5):
            expected = cs.c(n) if n == k else 0
            assert pair(TSeries.t(6, k), XPoly.monomial(n), cs) == expected


def test_pairing_evaluation_functional():
    # <e_q(a t) | x^n> = a^n
    a = Fraction(3, 2)
    f = Functional(TSeries([a**k / cs.c(k) for k in range(6)]))
    p = XPoly([1, Q, 2])
    assert f(p, cs) == p(a)


def test_pair_rejects_short_series():
    with pytest.raises(ValueError):
        pair(TSeries([1, 1]), XPoly.monomial(3), cs)


def test_lowering_operator():
    assert apply_series(TSeries.t(4), XPoly.monomial(3), cs) == XPoly.monomial(2, cs.ratio(3, 2))
    assert apply_series(TSeries.one(3), XPoly([1, 2, Q]), cs) == XPoly([1, 2, Q])
    assert d_cq(XPoly([5]), 1, cs) == XPoly()


def test_integral_inverts_derivative():
    for n in range(8):
        xn = XPoly.monomial(n)
        assert d_cq(c_antiderivative(xn, cs), 1, cs) == xn
        if n:
            assert c_antiderivative(d_cq(xn, 1, cs), cs) == xn


def test_integral_at_q1_is_classical():
    one = get_cseq(1)
    assert c_integral(XPoly([0, 0, 1]), 0, 1, one) == Fraction(1, 3)


def test_exp_y_acting_is_translation_at_q1():
    one = get_cseq(1)
    p = XPoly([1, 2, 3])
    shifted = apply_exp_y(p, one).at_y(Fraction(1, 2))
    assert shifted == XPoly([p(Fraction(1, 2)), 2 + 3, 3])


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n", range(9))
def test_generate_matches_conjugate_and_table(family, n):
    inv = generating_series(family, n, cs)
    gen = sheffer_generate(None, n, cs, inverse=inv)
    assert gen == conjugate_representation(None, n, cs, inverse=inv)
    assert gen == poly_of(family, n, cs)


@pytest.mark.parametrize("family", ("bernoulli", "euler"))
@pytest.mark.parametrize("n", range(9))
def test_orthogonality(family, n):
    g = sheffer_g(family, n + 2, cs)
    s = poly_of(family, n, cs)
    for k in range(n + 2):
        gk = ts_mul(g, TSeries.t(n + 2, k))
        assert pair(gk, s, cs) == (cs.c(n) if k == n else 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_genocchi_orthogonality_for_positive_indices(n):
    # 1/g = 2t/(e+1), so g t^k = (e+1)/2 t^(k-1) is a power series only for k >= 1
    half = sheffer_g("euler", n + 2, cs)
    s = poly_of("genocchi", n, cs)
    for k in range(1, n + 2):
        assert pair(ts_mul(half, TSeries.t(n + 2, k - 1)), s, cs) == (cs.c(n) if k == n else 0)


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n", range(9))
def test_sheffer_identity_symbolic_y(family, n):
    from qumbral.polyx import XYPoly

    lhs = apply_exp_y(poly_of(family, n, cs), cs)
    rhs = XYPoly()
    for k in range(n + 1):
        rhs = rhs + XYPoly.outer(poly_of(family, n - k, cs), XPoly.monomial(k, cs.binom(n, k)))
    assert lhs == rhs


@given(st.lists(small_fractions, min_size=1, max_size=6), st.sampled_from(SAMPLE_Q))
def test_expansion_reconstructs(coeffs, q0):
    csq = get_cseq(q0)
    p = XPoly(coeffs)
    if not p:
        return
    g = sheffer_g("euler", int(p.degree), csq)
    d = expand_in_sheffer_basis(p, g, csq)
    basis = [sheffer_generate(g, k, csq) for k in range(len(d))]
    assert reconstruct(d, basis) == p


@given(st.lists(small_fractions, max_size=6), st.lists(small_fractions, max_size=6))
def test_operators_are_linear(a, b):
    pa, pb = XPoly(a), XPoly(b)
    f = eq_exp_series(6, cs)
    assert apply_series(f, pa + pb, cs) == apply_series(f, pa, cs) + apply_series(f, pb, cs)
    assert pair(f, pa + pb, cs) == pair(f, pa, cs) + pair(f, pb, cs)
