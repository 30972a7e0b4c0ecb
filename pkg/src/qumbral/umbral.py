"""Umbral calculus weighted by c_n instead of n!.

Series act on polynomials in two ways: as linear functionals through the
pairing <t^k | x^n> = c_n delta_{n,k}, and as operators through
t^k x^n = (c_n / c_{n-k}) x^{n-k}.  Sheffer sequences are supported only for
pairs (g(t), t).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cfactorial import CSeq, get_cseq
from .polyx import XPoly, XYPoly, xpoly_eval
from .series import TSeries, ts_mul, ts_reciprocal

__all__ = [
    "Functional",
    "pair",
    "apply_series",
    "apply_exp_y",
    "d_cq",
    "c_antiderivative",
    "c_integral",
    "sheffer_generate",
    "conjugate_representation",
    "expand_in_sheffer_basis",
    "reconstruct",
]


@dataclass(frozen=True)
class Functional:
    """A series viewed as a linear functional on polynomials."""

    series: TSeries

    def __call__(self, p: XPoly, cs: CSeq | None = None):
        return pair(self, p, cs)


def _series(f) -> TSeries:
    return f.series if isinstance(f, Functional) else f


def pair(f: Functional | TSeries, p: XPoly, cs: CSeq | None = None):
    """<f(t) | p(x)> = sum_k c_k a_k [x^k]p."""
    cs = cs or get_cseq()
    f = _series(f)
    if p and p.degree > f.order:
        raise ValueError(
            f"series truncated at order {f.order} cannot pair with degree {p.degree}"
        )
    acc = cs.zero
    for k, pk in enumerate(p.coeffs):
        a = f.coeffs[k]
        if pk and a:
            acc = acc + a * cs.c(k) * pk
    return acc


def _t_power(p: XPoly, k: int, cs: CSeq) -> XPoly:
    if k == 0:
        return p
    return XPoly(
        p.coeffs[n] * cs.ratio(n, n - k) for n in range(k, len(p.coeffs))
    )


def apply_series(f: TSeries, p: XPoly, cs: CSeq | None = None) -> XPoly:
    """The operator f(t) on p: sum_k a_k t^k p."""
    cs = cs or get_cseq()
    if p and p.degree > f.order:
        raise ValueError(
            f"series truncated at order {f.order} cannot act on degree {p.degree}"
        )
    out = XPoly()
    for k in range(len(p.coeffs)):
        a = f.coeffs[k]
        if a:
            out = out + _t_power(p, k, cs) * a
    return out


def apply_exp_y(p: XPoly, cs: CSeq | None = None) -> XYPoly:
    """e_q(y t) acting on p(x), with y kept as a second variable."""
    cs = cs or get_cseq()
    out = XYPoly()
    for k in range(len(p.coeffs)):
        low = _t_power(p, k, cs) * (1 / cs.c(k))
        out = out + XYPoly.outer(low, XPoly.monomial(k))
    return out


def d_cq(p: XPoly, k: int = 1, cs: CSeq | None = None) -> XPoly:
    """k-fold c_q-derivative: x^n -> (c_n / c_{n-k}) x^{n-k}."""
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    return _t_power(p, k, cs or get_cseq())


def c_antiderivative(p: XPoly, cs: CSeq | None = None) -> XPoly:
    """Indefinite c_q-integral: x^n -> (c_n / c_{n+1}) x^{n+1}, zero constant."""
    cs = cs or get_cseq()
    return XPoly([0] + [c * cs.ratio(n, n + 1) for n, c in enumerate(p.coeffs)])


def c_integral(p: XPoly, a, b, cs: CSeq | None = None):
    """Definite c_q-integral of p from a to b."""
    big = c_antiderivative(p, cs)
    return xpoly_eval(big, b) - xpoly_eval(big, a)


def _inverse_of(g: TSeries | None, inverse: TSeries | None) -> TSeries:
    if inverse is not None:
        return inverse
    if g is None:
        raise ValueError("need g or its reciprocal")
    return ts_reciprocal(g)


def sheffer_generate(
    g: TSeries | None, n: int, cs: CSeq | None = None, *, inverse: TSeries | None = None
) -> XPoly:
    """s_n(x) = (1/g(t)) x^n for the Sheffer pair (g, t).

    ``inverse`` may carry 1/g directly, which is how a "g" with a pole at
    t = 0 (the Genocchi case) is handled.
    """
    h = _inverse_of(g, inverse)
    if h.order < n:
        raise ValueError(f"series order {h.order} < {n}")
    return apply_series(h, XPoly.monomial(n), cs)


def conjugate_representation(
    g: TSeries | None, n: int, cs: CSeq | None = None, *, inverse: TSeries | None = None
) -> XPoly:
    """s_n(x) = sum_k <g(t)^{-1} t^k | x^n> / c_k  x^k."""
    cs = cs or get_cseq()
    h = _inverse_of(g, inverse)
    xn = XPoly.monomial(n)
    coeffs = []
    for k in range(n + 1):
        hk = ts_mul(h, TSeries.t(h.order, k)) if k else h
        coeffs.append(pair(hk, xn, cs) / cs.c(k))
    return XPoly(coeffs)


def expand_in_sheffer_basis(p: XPoly, g: TSeries, cs: CSeq | None = None) -> list:
    """Coefficients d_k = <g(t) t^k | p> / c_k with p = sum d_k s_k."""
    cs = cs or get_cseq()
    if not p:
        return []
    out = []
    for k in range(int(p.degree) + 1):
        gk = ts_mul(g, TSeries.t(g.order, k)) if k else g
        out.append(pair(gk, p, cs) / cs.c(k))
    return out


def reconstruct(coeffs, basis) -> XPoly:
    """sum_k coeffs[k] * basis[k]."""
    out = XPoly()
    for d, s in zip(coeffs, basis):
        if d:
            out = out + s * d
    return out
