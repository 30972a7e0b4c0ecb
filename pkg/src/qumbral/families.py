"""Degenerate Bernoulli, Euler and Genocchi numbers and polynomials.

Generating functions, with e = e_q(t):

    Bernoulli   t / (e - 1)        Sheffer for ((e - 1)/t, t)
    Euler       2 / (e + 1)        Sheffer for ((e + 1)/2, t)
    Genocchi    2t / (e + 1)       "g" = (e + 1)/(2t) has a pole at t = 0

Numbers come from the series (canonical) or from the triangular
recurrences (the cross-check).  Polynomials are
p_n(x) = sum_k binom_c(n, k) u_{n-k} x^k.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .cfactorial import CSeq, get_cseq
from .polyx import XPoly, xpoly_eval
from .series import (
    TSeries,
    c_coefficient,
    eq_exp_series,
    ts_delta_divide,
    ts_mul,
    ts_reciprocal,
)
from .umbral import c_integral, d_cq, expand_in_sheffer_basis

__all__ = [
    "Family",
    "FamilyTable",
    "generating_series",
    "sheffer_g",
    "numbers_series_route",
    "numbers_recurrence_route",
    "numbers",
    "poly_of",
    "polys",
    "build_table",
    "bhat",
    "euler_in_bernoulli",
    "genocchi_in_bernoulli",
    "bernoulli_in_euler",
    "resolve_bernoulli_in_euler_lambda",
    "expand_in_bernoulli_basis",
    "expand_in_euler_basis",
    "resolve_euler_basis_sign",
    "PRINTED_LAMBDA",
    "PROOF_LAMBDA",
]

#: constant on the E_{n-1} correction term as printed in the theorem statement
PRINTED_LAMBDA = Fraction(1)
#: the same constant as carried through the theorem's proof
PROOF_LAMBDA = Fraction(1, 2)


class Family(str, Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"
    GENOCCHI = "genocchi"

    @classmethod
    def parse(cls, name) -> Family:
        if isinstance(name, Family):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            choices = ", ".join(f.value for f in cls)
            raise ValueError(f"unknown family {name!r} (choose from {choices})") from None


def _cs(cs: CSeq | None) -> CSeq:
    return get_cseq() if cs is None else cs


def generating_series(family, order: int, cs: CSeq | None = None) -> TSeries:
    """The numbers' generating function sum u_n t^n / c_n, truncated at ``order``."""
    family = Family.parse(family)
    cs = _cs(cs)
    e = eq_exp_series(order + 1, cs)
    if family is Family.BERNOULLI:
        return ts_delta_divide(TSeries.t(order + 1), e - 1)
    euler = ts_reciprocal((e + 1) * Fraction(1, 2)).truncate(order)
    if family is Family.EULER:
        return euler
    return euler.shift(1)


def sheffer_g(family, order: int, cs: CSeq | None = None) -> TSeries:
    """g(t) of the Sheffer pair (g, t).  Not defined for Genocchi."""
    family = Family.parse(family)
    cs = _cs(cs)
    e = eq_exp_series(order + 1, cs)
    if family is Family.BERNOULLI:
        return (e - 1).div_t()
    if family is Family.EULER:
        return ((e + 1) * Fraction(1, 2)).truncate(order)
    raise ValueError("the Genocchi generating function has no power-series g(t)")


class _Memo:
    """Grow-only per-(family, q, route) cache of number sequences."""

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()

    def get(self, key, n: int, compute):
        seq = self._data.get(key)
        if seq is None or len(seq) <= n:
            seq = compute(n)
            with self._lock:
                old = self._data.get(key)
                if old is None or len(old) < len(seq):
                    self._data[key] = seq
        return seq[: n + 1]


_numbers_memo = _Memo()
_poly_memo: dict = {}


def numbers_series_route(family, n_max: int, cs: CSeq | None = None) -> list:
    family = Family.parse(family)
    cs = _cs(cs)

    def compute(n):
        f = generating_series(family, n, cs)
        return [c_coefficient(f, k, cs) for k in range(n + 1)]

    return _numbers_memo.get((family, cs, "series"), n_max, compute)


def _bernoulli_rec(n_max: int, cs: CSeq) -> list:
    b = [cs.one]
    for n in range(1, n_max + 1):
        acc = cs.zero
        for k in range(n):
            acc = acc + cs.binom(n + 1, k) * b[k]
        b.append(-acc / cs.binom(n + 1, n))
    return b


def _euler_rec(n_max: int, cs: CSeq) -> list:
    e = [cs.one]
    for n in range(1, n_max + 1):
        acc = cs.zero
        for k in range(n):
            acc = acc + cs.binom(n, k) * e[k]
        e.append(acc * Fraction(-1, 2))
    return e


def _genocchi_rec(n_max: int, cs: CSeq) -> list:
    g = [cs.zero, cs.one]
    for n in range(1, n_max):
        acc = cs.zero
        for k in range(n + 1):
            acc = acc + cs.binom(n + 1, k) * g[k]
        g.append(acc * Fraction(-1, 2))
    return g[: n_max + 1]


def numbers_recurrence_route(family, n_max: int, cs: CSeq | None = None) -> list:
    family = Family.parse(family)
    cs = _cs(cs)
    fn = {
        Family.BERNOULLI: _bernoulli_rec,
        Family.EULER: _euler_rec,
        Family.GENOCCHI: _genocchi_rec,
    }[family]
    return _numbers_memo.get((family, cs, "recurrence"), n_max, lambda n: fn(n, cs))


def numbers(family, n_max: int, cs: CSeq | None = None, route: str = "series") -> list:
    if route == "series":
        return numbers_series_route(family, n_max, cs)
    if route == "recurrence":
        return numbers_recurrence_route(family, n_max, cs)
    raise ValueError(f"unknown route {route!r}")


def poly_of(family, n: int, cs: CSeq | None = None, route: str = "series") -> XPoly:
    family = Family.parse(family)
    cs = _cs(cs)
    key = (family, cs, route, n)
    p = _poly_memo.get(key)
    if p is None:
        u = numbers(family, n, cs, route)
        p = XPoly(cs.binom(n, k) * u[n - k] for k in range(n + 1))
        _poly_memo[key] = p
    return p


def polys(family, n_max: int, cs: CSeq | None = None, route: str = "series") -> list[XPoly]:
    return [poly_of(family, n, cs, route) for n in range(n_max + 1)]


@dataclass(frozen=True)
class FamilyTable:
    family: Family
    numbers: tuple
    polys: tuple
    route: str

    def __len__(self) -> int:
        return len(self.numbers)


def build_table(family, n_max: int, cs: CSeq | None = None, route: str = "series") -> FamilyTable:
    family = Family.parse(family)
    return FamilyTable(
        family,
        tuple(numbers(family, n_max, cs, route)),
        tuple(polys(family, n_max, cs, route)),
        route,
    )


def bhat(n: int, cs: CSeq | None = None) -> XPoly:
    """sum_k binom_c(n, k) k b_{n-k} u^k, the weighted Bernoulli polynomial."""
    cs = _cs(cs)
    b = numbers(Family.BERNOULLI, n, cs)
    return XPoly(cs.binom(n, k) * k * b[n - k] for k in range(n + 1))


# -- connection coefficients -----------------------------------------------


def euler_in_bernoulli(n: int, cs: CSeq | None = None, form: str = "single") -> list:
    """d_k with E_n(x) = sum_k d_k beta_k(x)."""
    cs = _cs(cs)
    e = numbers(Family.EULER, n + 1, cs)
    scale = cs.ratio(n, n + 1)
    if form == "single":
        return [
            -2 * scale * cs.binom(n + 1, k) * e[n - k + 1] for k in range(n + 1)
        ]
    if form == "double":
        out = []
        for k in range(n + 1):
            acc = cs.zero
            for m in range(n - k + 1):
                acc = acc + cs.multinom(n + 1, k, m, n - k - m + 1) * e[m]
            out.append(scale * acc)
        return out
    raise ValueError(f"unknown form {form!r}")


def genocchi_in_bernoulli(n: int, cs: CSeq | None = None, form: str = "single") -> list:
    """d_0..d_{n-1} with G_n(x) = sum_k d_k beta_k(x); needs n >= 1."""
    if n < 1:
        raise ValueError("G_0 = 0 has no expansion; need n >= 1")
    cs = _cs(cs)
    g = numbers(Family.GENOCCHI, n + 1, cs)
    scale = cs.ratio(n, n + 1)
    if form == "single":
        return [-2 * scale * cs.binom(n + 1, k) * g[n - k + 1] for k in range(n)]
    if form == "double":
        out = []
        for k in range(n + 1):
            acc = cs.zero
            for m in range(n - k + 1):
                acc = acc + cs.multinom(n + 1, k, m, n + 1 - k - m) * g[m]
            out.append(scale * acc)
        if out[n]:
            raise ArithmeticError("double-sum form produced a beta_n term")
        return out[:n]
    raise ValueError(f"unknown form {form!r}")


def resolve_bernoulli_in_euler_lambda(cs: CSeq | None = None):
    """Solve for the E_{n-1} correction constant at n = 1 from the basis oracle.

    beta_1 = b_1 E_0 + b_0 E_1 + lambda (c_1/c_0) E_0, so lambda is whatever
    the independent Euler-basis expansion of beta_1 leaves over.
    """
    cs = _cs(cs)
    beta1 = poly_of(Family.BERNOULLI, 1, cs)
    d = expand_in_sheffer_basis(beta1, sheffer_g(Family.EULER, 1, cs), cs)
    b = numbers(Family.BERNOULLI, 1, cs)
    return (d[0] - cs.binom(1, 0) * b[1]) / cs.ratio(1, 0)


def bernoulli_in_euler(n: int, cs: CSeq | None = None, lam=None) -> list:
    """d_k with beta_n(x) = sum_k d_k E_k(x); needs n >= 1.

    ``lam`` defaults to the oracle-resolved constant.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    cs = _cs(cs)
    if lam is None:
        lam = resolve_bernoulli_in_euler_lambda(cs)
    b = numbers(Family.BERNOULLI, n, cs)
    d = [cs.binom(n, k) * b[n - k] for k in range(n + 1)]
    d[n - 1] = d[n - 1] + lam * cs.ratio(n, n - 1)
    return d


def expand_in_bernoulli_basis(p: XPoly, cs: CSeq | None = None) -> list:
    """d_k = (1/c_k) * integral_0^1 D^k p, so that p = sum d_k beta_k."""
    cs = _cs(cs)
    if not p:
        return []
    return [
        c_integral(d_cq(p, k, cs), 0, 1, cs) / cs.c(k) for k in range(int(p.degree) + 1)
    ]


def resolve_euler_basis_sign(cs: CSeq | None = None) -> int:
    """Pick the sign s in ((D^k p)(1) + s (D^k p)(0)) / 2 using p = x.

    The oracle is the Sheffer-basis expansion against g = (e_q(t) + 1)/2.
    """
    cs = _cs(cs)
    p = XPoly.x()
    target = expand_in_sheffer_basis(p, sheffer_g(Family.EULER, 1, cs), cs)
    matches = [s for s in (1, -1) if expand_in_euler_basis(p, cs, sign=s) == target]
    if len(matches) != 1:
        raise ArithmeticError(f"sign not uniquely determined: {matches}")
    return matches[0]


def expand_in_euler_basis(p: XPoly, cs: CSeq | None = None, sign: int | None = None) -> list:
    """d_k = ((D^k p)(1) + sign * (D^k p)(0)) / (2 c_k), so that p = sum d_k E_k."""
    cs = _cs(cs)
    if sign is None:
        sign = resolve_euler_basis_sign(cs)
    if not p:
        return []
    out = []
    for k in range(int(p.degree) + 1):
        dk = d_cq(p, k, cs)
        out.append((xpoly_eval(dk, 1) + sign * xpoly_eval(dk, 0)) * Fraction(1, 2) / cs.c(k))
    return out
