from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SAMPLE_Q
from qumbral.cfactorial import (
    c_binom,
    c_of,
    c_power_of_sum,
    deformed_sum,
    get_cseq,
    pole_set,
)
from qumbral.exactnum import PoleError, Q, QRat
from qumbral.polyx import XYPoly
from qumbral.series import TSeries, eq_exp_series, ts_mul

cs = get_cseq()


def test_first_values():
    assert cs.c(0) == 1
    assert cs.c(1) == 1
    assert cs.c(2) == 2 / Q
    assert cs.c(3) == 6 / (Q * (2 * Q - 1))
    assert cs.qprod(0).coeffs == (1,)


def test_classical_limit_is_factorial():
    one = get_cseq(1)
    for n in range(10):
        assert one.c(n) == factorial(n)
        for k in range(n + 1):
            assert one.binom(n, k) == comb(n, k)


def test_q_two_gives_unit_weights():
    two = get_cseq(2)
    assert all(two.c(n) == 1 for n in range(12))


def test_binom_edges():
    assert cs.binom(5, 0) == 1
    assert cs.binom(5, 5) == 1
    assert cs.binom(5, 6) == 0
    assert cs.binom(5, -1) == 0
    assert c_binom(4, 2) == cs.c(4) / (cs.c(2) * cs.c(2))


@pytest.mark.parametrize("n", range(9))
def test_binom_symmetric(n):
    for k in range(n + 1):
        assert cs.binom(n, k) == cs.binom(n, n - k)


def test_multinomial_reduces_to_binomial():
    assert cs.multinom(6, 2, 4) == cs.binom(6, 2)
    assert cs.multinom(4, 1, 1, 2) == cs.c(4) / (cs.c(2))


def test_pole_error_names_point():
    half = get_cseq(Fraction(1, 2))
    assert half.c(2) == 4
    with pytest.raises(PoleError):
        half.c(3)
    assert pole_set(4) == [0, Fraction(1, 2), Fraction(2, 3)]


def test_deformed_sum():
    assert deformed_sum(0, Q) == Q
    assert deformed_sum(1, 1, q=1) == 2
    assert deformed_sum(2, 3, q=2) == 2 + 3 - 6


def test_get_cseq_is_cached():
    assert get_cseq() is get_cseq()
    assert get_cseq(Fraction(3)) is get_cseq(3)


@pytest.mark.parametrize("n", range(0, 13))
def test_power_of_sum_is_product_of_exponentials(n):
    ex = TSeries([XYPoly({(k, 0): 1 / cs.c(k)}) for k in range(n + 1)])
    ey = TSeries([XYPoly({(0, k): 1 / cs.c(k)}) for k in range(n + 1)])
    assert ts_mul(ex, ey)[n] * cs.c(n) == c_power_of_sum(n)


@given(st.sampled_from(SAMPLE_Q), st.integers(min_value=0, max_value=10))
def test_sampled_matches_symbolic(q0, n):
    assert get_cseq(q0).c(n) == cs.c(n)(q0)


@given(st.sampled_from(SAMPLE_Q), st.sampled_from(SAMPLE_Q))
def test_exponential_is_multiplicative_under_deformed_sum(a, b):
    # e_q(a) e_q(b) = e_q(a (+)_q b) holds for the series at q = 2: 1/(1-a) 1/(1-b) = 1/(1-u)
    u = deformed_sum(a, b, q=2)
    if u == 1 or a == 1 or b == 1:
        return
    assert Fraction(1) / (1 - a) * Fraction(1) / (1 - b) == Fraction(1) / (1 - u)


def test_eq_series_coefficients():
    e = eq_exp_series(4)
    assert [e[k] * cs.c(k) for k in range(5)] == [1] * 5
    assert c_of(3) == cs.c(3)
    assert isinstance(c_of(3), QRat)
