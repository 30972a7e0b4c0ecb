"""Truncated formal power series in t.

A :class:`TSeries` stores plain coefficients a_0..a_N (not c-weighted); the
umbral view f(t) = sum u_n t^n / c_n is read back with :func:`c_coefficient`.
Binary operations truncate to the smaller order, so every stored
coefficient is exact.
"""

from __future__ import annotations

from typing import Sequence

from .cfactorial import CSeq, get_cseq
from .polyx import XPoly

__all__ = [
    "TSeries",
    "ts_mul",
    "ts_reciprocal",
    "ts_delta_divide",
    "ts_derivative",
    "eq_exp_series",
    "eq_exp_x_series",
    "eq_exp_scaled",
    "c_coefficient",
]


class TSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> TSeries:
        return cls([1], order)

    @classmethod
    def t(cls, order: int, power: int = 1) -> TSeries:
        return cls([0] * power + [1], order)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TSeries([{terms}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("series are only comparable at equal order")
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None  # type: ignore[assignment]

    def truncate(self, order: int) -> TSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TSeries(self.coeffs[: order + 1])

    def __neg__(self) -> TSeries:
        return TSeries([-c for c in self.coeffs])

    def __add__(self, other) -> TSeries:
        if not isinstance(other, TSeries):
            other = TSeries([other], self.order)
        n = min(self.order, other.order)
        return TSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __sub__(self, other) -> TSeries:
        return self + (-other)

    def __rsub__(self, other) -> TSeries:
        return (-self) + other

    def __mul__(self, other) -> TSeries:
        if isinstance(other, TSeries):
            return ts_mul(self, other)
        return TSeries([c * other for c in self.coeffs])

    def __rmul__(self, other) -> TSeries:
        if isinstance(other, TSeries):
            return ts_mul(other, self)
        return TSeries([other * c for c in self.coeffs])

    def shift(self, k: int = 1) -> TSeries:
        """Multiply by t^k (order is kept)."""
        return TSeries([0] * k + list(self.coeffs[: self.order + 1 - k]), self.order)

    def div_t(self) -> TSeries:
        """Divide by t; requires a_0 = 0.  Order drops by one."""
        if self.coeffs[0]:
            raise ValueError("series is not divisible by t")
        if self.order == 0:
            raise ValueError("order-0 series has nothing left after dividing by t")
        return TSeries(self.coeffs[1:])


def ts_mul(f: TSeries, g: TSeries) -> TSeries:
    """Cauchy product truncated to min(order f, order g)."""
    n = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    out = []
    for k in range(n + 1):
        acc = 0
        for i in range(k + 1):
            x, y = a[i], b[k - i]
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return TSeries(out)


def ts_reciprocal(f: TSeries) -> TSeries:
    a = f.coeffs
    if not a[0]:
        raise ZeroDivisionError("not invertible (delta or zero series)")
    inv0 = 1 / a[0]
    g = [inv0]
    for n in range(1, f.order + 1):
        acc = 0
        for k in range(1, n + 1):
            if a[k]:
                acc = acc + a[k] * g[n - k]
        g.append(-acc * inv0)
    return TSeries(g)


def ts_delta_divide(num: TSeries, den: TSeries) -> TSeries:
    """num/den for two series with zero constant term; den must have a_1 != 0.

    The result has order min(order) - 1.
    """
    if num.coeffs[0]:
        raise ValueError("numerator of a delta quotient must have zero constant term")
    if den.coeffs[0]:
        raise ValueError("denominator is not a delta series (nonzero constant term)")
    if den.order < 1 or not den.coeffs[1]:
        raise ZeroDivisionError("degree-≥2 denominator")
    return ts_mul(num.div_t(), ts_reciprocal(den.div_t()))


def ts_derivative(f: TSeries) -> TSeries:
    if f.order == 0:
        return TSeries([0])
    return TSeries([(k + 1) * f.coeffs[k + 1] for k in range(f.order)])


def eq_exp_series(order: int, cs: CSeq | None = None) -> TSeries:
    """e_q(t) = sum t^n / c_n."""
    cs = cs or get_cseq()
    return TSeries([1 / cs.c(n) for n in range(order + 1)])


def eq_exp_scaled(y, order: int, cs: CSeq | None = None) -> TSeries:
    """e_q(y t) = sum y^n t^n / c_n for any ring element y."""
    cs = cs or get_cseq()
    out, p = [], 1
    for n in range(order + 1):
        out.append(p * (1 / cs.c(n)))
        p = p * y
    return TSeries(out)


def eq_exp_x_series(order: int, cs: CSeq | None = None) -> TSeries:
    """e_q(x t) with XPoly coefficients x^n / c_n."""
    cs = cs or get_cseq()
    return TSeries([XPoly.monomial(n, 1 / cs.c(n)) for n in range(order + 1)])


def c_coefficient(f: TSeries, n: int, cs: CSeq | None = None):
    """The u_n of f = sum u_n t^n / c_n, i.e. c_n * a_n."""
    if n < 0 or n > f.order:
        raise IndexError(f"index {n} beyond truncation order {f.order}")
    cs = cs or get_cseq()
    return f.coeffs[n] * cs.c(n)
