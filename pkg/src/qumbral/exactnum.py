"""Exact rationals, polynomials in q, and the rational-function field Q(q).

Rationals are :class:`fractions.Fraction`.  A :class:`QPoly` is a dense,
immutable coefficient tuple (index i holds the coefficient of q**i).  A
:class:`QRat` is a reduced quotient of two QPolys whose denominator is monic,
so two QRat values are equal exactly when their components are equal.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence, Union

__all__ = [
    "BigRat",
    "PoleError",
    "QPoly",
    "QRat",
    "Q",
    "qpoly_gcd",
    "qrat_normalize",
    "qrat_eval",
    "as_qrat",
]

BigRat = Fraction
Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class PoleError(ZeroDivisionError):
    """Evaluation hit a zero of the denominator."""

    def __init__(self, q0, message: str | None = None):
        self.q0 = Fraction(q0)
        super().__init__(message or f"pole at q0={self.q0}")


def _strip(c: list) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


class QPoly:
    """Dense univariate polynomial in q with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _strip([Fraction(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple) -> QPoly:
        # caller guarantees Fraction entries and no trailing zeros
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, c: Scalar) -> QPoly:
        c = Fraction(c)
        return cls._raw((c,) if c else ())

    @classmethod
    def linear(cls, a: Scalar, b: Scalar) -> QPoly:
        """The polynomial a*q + b."""
        return cls((b, a))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (_ONE,)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == QPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("QPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"QPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_qpoly(self)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> QPoly:
        return QPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> QPoly:
        if not isinstance(other, QPoly):
            if isinstance(other, (int, Fraction)):
                other = QPoly.const(other)
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other) -> QPoly:
        if isinstance(other, (int, Fraction)):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QPoly:
        return (-self) + other

    def __mul__(self, other) -> QPoly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return QPoly._raw(())
            return QPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly._raw(())
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QPoly._raw((_ONE,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: QPoly) -> tuple[QPoly, QPoly]:
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        d = other.coeffs
        dl = len(d)
        inv = 1 / d[-1]
        if len(r) < dl:
            return QPoly._raw(()), self
        quo = [_ZERO] * (len(r) - dl + 1)
        for k in range(len(r) - dl, -1, -1):
            c = r[k + dl - 1] * inv
            quo[k] = c
            if c:
                for j in range(dl):
                    r[k + j] -= c * d[j]
        return QPoly._raw(_strip(quo)), QPoly._raw(_strip(r[: dl - 1]))

    def __floordiv__(self, other: QPoly) -> QPoly:
        return self.divmod(other)[0]

    def __mod__(self, other: QPoly) -> QPoly:
        return self.divmod(other)[1]

    def exact_div(self, other: QPoly) -> QPoly:
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def monic(self) -> QPoly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = 1 / self.coeffs[-1]
        return QPoly._raw(tuple(c * inv for c in self.coeffs))

    def __call__(self, q0: Scalar) -> Fraction:
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def evaluate(self, q0):
        """Horner evaluation at any ring element (QRat, Fraction, ...)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc


def qpoly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd over Q by the Euclidean algorithm."""
    if not a and not b:
        raise ValueError("gcd of two zero polynomials is undefined")
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a.monic()
    if len(b) == 1:
        return QPoly._raw((_ONE,))
    a, b = a.monic(), b.monic()
    while b:
        a, b = b, (a % b).monic()
    return a


class QRat:
    """Element of Q(q) held as num/den with gcd 1 and monic den.

    Arithmetic accepts ints and Fractions on either side.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if not isinstance(num, QPoly):
            num = QPoly.const(num)
        if not isinstance(den, QPoly):
            den = QPoly.const(den)
        n, d = _normalize(num, den)
        self.num = n
        self.den = d

    @classmethod
    def _raw(cls, num: QPoly, den: QPoly) -> QRat:
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def const(cls, c: Scalar) -> QRat:
        return cls._raw(QPoly.const(c), _QONE)

    @classmethod
    def from_qpoly(cls, p: QPoly) -> QRat:
        return cls._raw(p, _QONE)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_const(self) -> bool:
        return len(self.num) <= 1 and self.den.is_one()

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"{self} is not a constant")
        return self.num[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, QRat):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_const():
            return hash(self.const_value())
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"QRat({self})"

    def __str__(self) -> str:
        return format_qrat(self)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> QRat:
        return QRat._raw(-self.num, self.den)

    def __add__(self, other) -> QRat:
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            return QRat._raw(self.num + self.den * other, self.den)
        if not isinstance(other, QRat):
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        na, da, nb, db = self.num, self.den, other.num, other.den
        if da == db:
            if da.is_one():
                return QRat._raw(na + nb, da)
            return qrat_normalize(na + nb, da)
        if da.is_one():
            return QRat._raw(na * db + nb, db)
        if db.is_one():
            return QRat._raw(na + nb * da, da)
        g = qpoly_gcd(da, db)
        if g.is_one():
            return QRat._raw(na * db + nb * da, da * db)
        s = da.exact_div(g)
        t = db.exact_div(g)
        num = na * t + nb * s
        if not num:
            return _QRZERO
        g2 = qpoly_gcd(num, g)
        if not g2.is_one():
            num = num.exact_div(g2)
            db = db.exact_div(g2)
        return _make_monic(num, s * db)

    __radd__ = __add__

    def __sub__(self, other) -> QRat:
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QRat:
        return (-self) + other

    def __mul__(self, other) -> QRat:
        if isinstance(other, (int, Fraction)):
            if not other:
                return _QRZERO
            return QRat._raw(self.num * other, self.den)
        if not isinstance(other, QRat):
            return NotImplemented
        if not self.num or not other.num:
            return _QRZERO
        na, da, nb, db = self.num, self.den, other.num, other.den
        if not db.is_one():
            g = qpoly_gcd(na, db)
            if not g.is_one():
                na, db = na.exact_div(g), db.exact_div(g)
        if not da.is_one():
            g = qpoly_gcd(nb, da)
            if not g.is_one():
                nb, da = nb.exact_div(g), da.exact_div(g)
        return _make_monic(na * nb, da * db)

    __rmul__ = __mul__

    def inverse(self) -> QRat:
        if not self.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        return _make_monic(self.den, self.num)

    def __truediv__(self, other) -> QRat:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero in Q(q)")
            return QRat._raw(self.num * (1 / Fraction(other)), self.den)
        if not isinstance(other, QRat):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> QRat:
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int) -> QRat:
        if n < 0:
            return self.inverse() ** (-n)
        # powers of reduced fractions stay reduced
        return QRat._raw(self.num**n, self.den**n)

    def __call__(self, q0: Scalar) -> Fraction:
        return qrat_eval(self, q0)


def _make_monic(num: QPoly, den: QPoly) -> QRat:
    lc = den.lc
    if lc != 1:
        inv = 1 / lc
        num = num * inv
        den = den * inv
    return QRat._raw(num, den)


def _normalize(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    if not num:
        return _QZERO, _QONE
    g = qpoly_gcd(num, den)
    if not g.is_one():
        num, den = num.exact_div(g), den.exact_div(g)
    r = _make_monic(num, den)
    return r.num, r.den


def qrat_normalize(num: QPoly, den: QPoly) -> QRat:
    """Canonical representative of num/den: reduced, monic denominator."""
    n, d = _normalize(num, den)
    return QRat._raw(n, d)


def qrat_eval(r: QRat, q0: Scalar) -> Fraction:
    """Evaluate r at the rational point q0; raises PoleError if den(q0) = 0."""
    q0 = Fraction(q0)
    d = r.den(q0)
    if not d:
        raise PoleError(q0)
    return r.num(q0) / d


def as_qrat(x) -> QRat:
    if isinstance(x, QRat):
        return x
    if isinstance(x, QPoly):
        return QRat.from_qpoly(x)
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        return QRat.const(Fraction(x))
    raise TypeError(f"cannot convert {type(x).__name__} to QRat")


_QZERO = QPoly._raw(())
_QONE = QPoly._raw((_ONE,))
_QRZERO = QRat._raw(_QZERO, _QONE)

#: the indeterminate q as an element of Q(q)
Q = QRat._raw(QPoly._raw((_ZERO, _ONE)), _QONE)


# -- text rendering (parseable by formats.parse_polynomial) -------------


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_qpoly(p: QPoly, var: str = "q") -> str:
    if not p:
        return "0"
    parts: list[str] = []
    for i in range(len(p) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = _coeff_str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a.numerator}*{mono}"
            elif a.numerator == 1:
                body = f"{mono}/{a.denominator}"
            else:
                body = f"{a.numerator}*{mono}/{a.denominator}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_qrat(r: QRat) -> str:
    if r.den.is_one():
        return format_qpoly(r.num)
    num, den = integer_form(r)
    ns = format_qpoly(num)
    ds = format_qpoly(den)
    if len([c for c in num.coeffs if c]) > 1:
        ns = f"({ns})"
    if len([c for c in den.coeffs if c]) > 1 or den.degree > 0 and den.lc != 1:
        ds = f"({ds})"
    return f"{ns}/{ds}"


def integer_form(r: QRat) -> tuple[QPoly, QPoly]:
    """Scale num/den to coprime integer coefficients with positive leading den."""
    (num,), den = integer_pair([r.num], r.den)
    return num, den


def integer_pair(nums: Sequence[QPoly], den: QPoly) -> tuple[list[QPoly], QPoly]:
    """Scale several numerators and one shared denominator to integer coefficients.

    The common factor makes the overall content 1 and den.lc positive.
    """
    coeffs = [c for p in (*nums, den) for c in p.coeffs]
    m = 1
    for c in coeffs:
        m = lcm(m, c.denominator)
    g = 0
    for c in coeffs:
        g = gcd(g, int(c * m))
    scale = Fraction(m, g or 1)
    if den.lc < 0:
        scale = -scale
    return [p * scale for p in nums], den * scale
