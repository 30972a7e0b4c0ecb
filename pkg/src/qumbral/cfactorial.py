"""The generalized factorials c_n, the products Q_n(q) and the c-binomials.

Everything downstream is parametrized by a :class:`CSeq`, which fixes the
value of q: either the indeterminate (symbolic work over Q(q)) or a rational
point (sampled checks over Q).  ``get_cseq()`` returns shared, memoized
instances.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactnum import PoleError, Q, QPoly, QRat, _make_monic
from .polyx import XYPoly

__all__ = [
    "CSeq",
    "get_cseq",
    "big_q_factorial",
    "c_of",
    "c_binom",
    "deformed_sum",
    "c_power_of_sum",
    "pole_set",
]


class CSeq:
    """Memoized table of Q_n and c_n at one value of q.

    ``q=None`` means the symbolic indeterminate.  Tables only ever grow and
    every entry is a pure function of its index, so concurrent fills are
    harmless; the lock just avoids duplicated work.
    """

    def __init__(self, q=None):
        self.symbolic = q is None
        self.q = Q if q is None else Fraction(q)
        one = QRat.const(1) if self.symbolic else Fraction(1)
        self.one = one
        self.zero = one * 0
        self._qprod: list = [QPoly.const(1) if self.symbolic else Fraction(1)]
        self._c: list = [one]
        self._binom: dict[tuple[int, int], object] = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return "CSeq(symbolic)" if self.symbolic else f"CSeq(q={self.q})"

    def __hash__(self) -> int:
        return hash(None if self.symbolic else self.q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CSeq):
            return NotImplemented
        return self.symbolic == other.symbolic and (self.symbolic or self.q == other.q)

    def _factor(self, j: int):
        # j*q - (j-1)
        if self.symbolic:
            return QPoly.linear(j, 1 - j)
        return j * self.q - (j - 1)

    def qprod(self, n: int):
        """Q_n: a QPoly when symbolic, its value at q otherwise."""
        if n < 0:
            raise ValueError("Q_n needs n >= 0")
        with self._lock:
            while len(self._qprod) <= n:
                j = len(self._qprod)
                self._qprod.append(self._qprod[-1] * self._factor(j))
        return self._qprod[n]

    def c(self, n: int):
        if n < 0:
            raise ValueError("c_n needs n >= 0")
        if n < len(self._c):
            return self._c[n]
        for m in range(len(self._c), n + 1):
            qp = self.qprod(m - 1)
            if self.symbolic:
                val = _make_monic(QPoly.const(factorial(m)), qp)
            else:
                if not qp:
                    raise PoleError(self.q, f"c_{m} has a pole at q={self.q}")
                val = factorial(m) / qp
            with self._lock:
                if len(self._c) == m:
                    self._c.append(val)
        return self._c[n]

    def ratio(self, n: int, m: int):
        """c_n / c_m."""
        return self.c(n) / self.c(m)

    def binom(self, n: int, k: int):
        if k < 0 or k > n:
            return self.zero
        key = (n, k)
        val = self._binom.get(key)
        if val is None:
            val = self.c(n) / (self.c(k) * self.c(n - k))
            self._binom[key] = val
            self._binom[(n, n - k)] = val
        return val

    def multinom(self, n: int, *parts: int):
        """c_n / (c_{p1} c_{p2} ...); zero unless the parts are >= 0 and sum to n."""
        if any(p < 0 for p in parts) or sum(parts) != n:
            return self.zero
        den = self.one
        for p in parts:
            den = den * self.c(p)
        return self.c(n) / den


@lru_cache(maxsize=None)
def _shared_cseq(q: Fraction | None) -> CSeq:
    return CSeq(q)


def get_cseq(q=None) -> CSeq:
    """Shared CSeq for the symbolic case (q=None) or a rational q."""
    return _shared_cseq(None if q is None else Fraction(q))


def _cs(cs: CSeq | None) -> CSeq:
    return get_cseq() if cs is None else cs


def big_q_factorial(n: int) -> QPoly:
    """Q_n(q) = prod_{j=1..n} (j q - (j-1)); Q_0 = 1."""
    return get_cseq().qprod(n)


def c_of(n: int, cs: CSeq | None = None):
    """c_0 = 1 and c_n = n! / Q_{n-1}(q)."""
    return _cs(cs).c(n)


def c_binom(n: int, k: int, cs: CSeq | None = None):
    """c_n / (c_k c_{n-k}); zero when k is outside 0..n."""
    return _cs(cs).binom(n, k)


def deformed_sum(a, b, q=Q):
    """a (+)_q b = a + b + (1 - q) a b, for any ring containing q."""
    return a + b + (1 - q) * a * b


def c_power_of_sum(n: int, cs: CSeq | None = None) -> XYPoly:
    """(x+y)^n_c = sum_k binom_c(n, k) x^k y^(n-k)."""
    cs = _cs(cs)
    return XYPoly({(k, n - k): cs.binom(n, k) for k in range(n + 1)})


def pole_set(n: int) -> list[Fraction]:
    """Rational q at which the denominator of c_n vanishes."""
    return [Fraction(j - 1, j) for j in range(1, n)]
