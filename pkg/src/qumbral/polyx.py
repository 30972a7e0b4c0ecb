"""Polynomials in x (dense) and in x, y (sparse) over Q(q) or over Q.

Coefficients are any field elements that support ``+ - * /`` with ints:
:class:`~qumbral.exactnum.QRat` for symbolic work, ``Fraction`` once q has
been fixed to a rational number.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .exactnum import QRat

__all__ = ["XPoly", "XYPoly", "xpoly_eval", "c_substitute", "leading_coeff"]

_SCALARS = (int, Fraction, QRat)


def _strip(c: list) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


class XPoly:
    """Dense polynomial in one variable; index k holds the coefficient of x**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip(list(coeffs))

    @classmethod
    def monomial(cls, k: int, c=1) -> XPoly:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> XPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator:
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            a, b = self.coeffs, other.coeffs
            return len(a) == len(b) and all(x == y for x, y in zip(a, b))
        if isinstance(other, _SCALARS):
            return self == XPoly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("XPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"XPoly({self})"

    def __str__(self) -> str:
        return format_xpoly(self)

    def __neg__(self) -> XPoly:
        return XPoly._raw(tuple(-c for c in self.coeffs))

    @classmethod
    def _raw(cls, coeffs: tuple) -> XPoly:
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    def __add__(self, other) -> XPoly:
        if isinstance(other, _SCALARS):
            other = XPoly((other,))
        elif not isinstance(other, XPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other) -> XPoly:
        if isinstance(other, _SCALARS):
            other = XPoly((other,))
        elif not isinstance(other, XPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> XPoly:
        return (-self) + other

    def __mul__(self, other) -> XPoly:
        if isinstance(other, _SCALARS):
            if not other:
                return XPoly._raw(())
            return XPoly._raw(_strip([c * other for c in self.coeffs]))
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return XPoly._raw(())
        out: list = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if not u:
                continue
            for j, v in enumerate(b):
                if v:
                    out[i + j] = out[i + j] + u * v
        return XPoly._raw(_strip(out))

    __rmul__ = __mul__

    def __truediv__(self, other) -> XPoly:
        if not isinstance(other, _SCALARS):
            return NotImplemented
        return XPoly._raw(_strip([c / other for c in self.coeffs]))

    def __pow__(self, n: int) -> XPoly:
        out = XPoly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x0):
        return xpoly_eval(self, x0)

    def map_coeffs(self, fn) -> XPoly:
        return XPoly(fn(c) for c in self.coeffs)


def xpoly_eval(p: XPoly, x0):
    """Horner evaluation of p at x0 (exact)."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


def leading_coeff(p: XPoly) -> tuple[int, object]:
    if not p:
        raise ValueError("zero polynomial has no leading coefficient")
    return len(p.coeffs) - 1, p.coeffs[-1]


class XYPoly:
    """Sparse polynomial in x and y: a mapping (i, j) -> coefficient of x^i y^j."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def _raw(cls, terms: dict) -> XYPoly:
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def from_x(cls, p: XPoly) -> XYPoly:
        return cls({(i, 0): c for i, c in enumerate(p.coeffs)})

    @classmethod
    def from_y(cls, p: XPoly) -> XYPoly:
        return cls({(0, j): c for j, c in enumerate(p.coeffs)})

    @classmethod
    def outer(cls, px: XPoly, py: XPoly) -> XYPoly:
        """The product px(x) * py(y)."""
        out = {}
        for i, a in enumerate(px.coeffs):
            if not a:
                continue
            for j, b in enumerate(py.coeffs):
                if b:
                    out[(i, j)] = a * b
        return cls(out)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, XYPoly):
            if self.terms.keys() != other.terms.keys():
                return False
            return all(v == other.terms[k] for k, v in self.terms.items())
        if isinstance(other, _SCALARS):
            return self == XYPoly({(0, 0): other})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"XYPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, reverse=True):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if s
            )
            c = self.terms[(i, j)]
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), 0)

    def __neg__(self) -> XYPoly:
        return XYPoly._raw({k: -v for k, v in self.terms.items()})

    def __add__(self, other) -> XYPoly:
        if isinstance(other, _SCALARS):
            other = XYPoly({(0, 0): other})
        elif isinstance(other, XPoly):
            other = XYPoly.from_x(other)
        elif not isinstance(other, XYPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return XYPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> XYPoly:
        if isinstance(other, (XYPoly, XPoly) + _SCALARS):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> XYPoly:
        return (-self) + other

    def __mul__(self, other) -> XYPoly:
        if isinstance(other, _SCALARS):
            if not other:
                return XYPoly._raw({})
            return XYPoly({k: v * other for k, v in self.terms.items()})
        if isinstance(other, XPoly):
            other = XYPoly.from_x(other)
        if not isinstance(other, XYPoly):
            return NotImplemented
        out: dict = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return XYPoly(out)

    __rmul__ = __mul__

    def at_y(self, y0) -> XPoly:
        """Substitute a scalar for y, leaving a polynomial in x."""
        deg = max((i for i, _ in self.terms), default=-1)
        out: list = [0] * (deg + 1)
        for (i, j), c in self.terms.items():
            out[i] = out[i] + c * y0**j
        return XPoly(out)


def c_substitute(p: XPoly, cs=None) -> XYPoly:
    """Replace every x^k in p by the c-power (x+y)^k_c."""
    from .cfactorial import c_power_of_sum

    out = XYPoly()
    for k, a in enumerate(p.coeffs):
        if a:
            out = out + c_power_of_sum(k, cs) * a
    return out


# -- text rendering ---------------------------------------------------------


def format_xpoly(p: XPoly, var: str = "x") -> str:
    """Render p in the input grammar, e.g. ``x^2 - x + (2 - q)/6``."""
    if not p:
        return "0"
    parts: list[tuple[str, str]] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        cs = str(c)
        sign = "+"
        if cs.startswith("-") and not _has_top_level_op(cs[1:]):
            sign, cs = "-", cs[1:]
        if mono:
            if cs == "1":
                body = mono
            elif _has_top_level_op(cs):
                body = f"({cs})*{mono}"
            else:
                body = f"{cs}*{mono}"
        else:
            body = f"({cs})" if _has_top_level_op(cs) and len(parts) else cs
        parts.append((sign, body))
    s0, b0 = parts[0]
    out = ("-" if s0 == "-" else "") + b0
    for s, b in parts[1:]:
        out += f" {s} {b}"
    return out


def _has_top_level_op(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and i > 0:
            return True
    return False
