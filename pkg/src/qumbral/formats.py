"""Parsing and rendering: polynomial literals, JSON, CSV and LaTeX tables.

JSON shapes (coefficients are decimal-free "p" or "p/r" strings):

    scalar      {"num": [c_0, c_1, ...],            "den": [d_0, d_1, ...]}
    polynomial  {"num": [[c_00, c_01, ...], ...],   "den": [d_0, d_1, ...]}

where num[i][j] is the coefficient of x^i q^j over the common denominator
den(q).  Numerators and denominator are scaled to integers with content 1
and a positive leading denominator coefficient.
"""

from __future__ import annotations

import csv
import io
import re
from fractions import Fraction
from math import gcd

from .exactnum import QPoly, QRat, as_qrat, integer_form, integer_pair, qpoly_gcd
from .polyx import XPoly

__all__ = [
    "ParseError",
    "parse_polynomial",
    "parse_rational",
    "rat_to_json",
    "rat_from_json",
    "xpoly_to_json",
    "xpoly_from_json",
    "table_rows_csv",
    "latex_table",
    "latex_rat",
    "latex_xpoly",
    "factor_denominator",
]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} at position {pos}")


# -- polynomial literal parser ----------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([qx])|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        start = m.start(1) if m.group(1) else m.start(2) if m.group(2) else m.start(3)
        if m.group(1):
            out.append(("num", m.group(1), start))
        elif m.group(2):
            out.append(("var", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            out.append(("op", ch, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    """expr := term (('+'|'-') term)* ; term := unary (('*'|'/'|juxtaposition) unary)*
    unary := ('+'|'-') unary | power ; power := atom ('^' int)?
    atom := int | 'q' | 'x' | '(' expr ')'
    """

    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}", tok[2])

    def parse(self) -> XPoly:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return val

    def expr(self) -> XPoly:
        val = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def _starts_atom(self, tok) -> bool:
        return tok[0] in ("num", "var") or tok[1] == "("

    def term(self) -> XPoly:
        val = self.unary()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in ("*", "/"):
                self.take()
                rhs = self.unary()
                if tok[1] == "*":
                    val = val * rhs
                else:
                    if rhs.degree != 0:
                        msg = "division by zero" if not rhs else "division by a polynomial in x"
                        raise ParseError(msg, tok[2])
                    val = val * (1 / as_qrat(rhs.coeffs[0]))
            elif self._starts_atom(tok):
                val = val * self.power()
            else:
                return val

    def unary(self) -> XPoly:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            val = self.unary()
            return -val if tok[1] == "-" else val
        return self.power()

    def power(self) -> XPoly:
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.take()
            if exp[0] != "num":
                raise ParseError("exponent must be a nonnegative integer", exp[2])
            return base ** int(exp[1])
        return base

    def atom(self) -> XPoly:
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            return XPoly([QRat.const(int(val))])
        if kind == "var":
            if val == "q":
                return XPoly([QRat(QPoly((0, 1)))])
            return XPoly([0, QRat.const(1)])
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def parse_polynomial(text: str) -> XPoly:
    """Parse e.g. ``"x^2 - (1-q)/(2*q)*x + 1/3"`` into an XPoly over Q(q)."""
    p = _Parser(text).parse()
    return XPoly(as_qrat(c) for c in p.coeffs)


def parse_rational(text: str) -> QRat:
    """Parse a rational-function literal in q (no x allowed)."""
    p = parse_polynomial(text)
    if p.degree > 0:
        raise ParseError("expected an expression in q only", 0)
    return as_qrat(p.coeff(0))


# -- JSON --------------------------------------------------------------------


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _qpoly_strs(p: QPoly) -> list[str]:
    return [_frac_str(c) for c in p.coeffs]


def _qpoly_from_strs(items) -> QPoly:
    return QPoly(Fraction(str(s)) for s in items)


def rat_to_json(r) -> dict:
    r = as_qrat(r)
    num, den = integer_form(r)
    return {"num": _qpoly_strs(num), "den": _qpoly_strs(den)}


def rat_from_json(obj: dict) -> QRat:
    return QRat(_qpoly_from_strs(obj["num"]), _qpoly_from_strs(obj["den"]))


def _common_den(coeffs: list[QRat]) -> QPoly:
    den = QPoly.const(1)
    for c in coeffs:
        if c:
            den = den * c.den.exact_div(qpoly_gcd(den, c.den))
    return den


def xpoly_common_form(p: XPoly) -> tuple[list[QPoly], QPoly]:
    """Numerators per x-power over one integer denominator in q."""
    coeffs = [as_qrat(c) for c in p.coeffs]
    den = _common_den(coeffs)
    nums = [c.num * den.exact_div(c.den) if c else QPoly() for c in coeffs]
    return integer_pair(nums, den)


def xpoly_to_json(p: XPoly) -> dict:
    nums, den = xpoly_common_form(p)
    return {"num": [_qpoly_strs(n) for n in nums], "den": _qpoly_strs(den)}


def xpoly_from_json(obj: dict) -> XPoly:
    den = _qpoly_from_strs(obj["den"])
    return XPoly(QRat(_qpoly_from_strs(row), den) for row in obj["num"])


# -- CSV ---------------------------------------------------------------------


def table_rows_csv(rows) -> str:
    """rows: iterable of (n, poly, number)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for n, poly, num in rows:
        w.writerow([n, str(poly), str(num)])
    return buf.getvalue()


# -- LaTeX -------------------------------------------------------------------


def factor_denominator(den: QPoly) -> tuple[Fraction, list[tuple[QPoly, int]], QPoly]:
    """Split an integer denominator into content * prod (j q - (j-1))^e * rest.

    The linear factors are the ones that build Q_n(q); anything left over is
    returned as ``rest``.
    """
    g = 0
    for c in den.coeffs:
        g = gcd(g, int(c))
    content = Fraction(g or 1)
    rest = den * (1 / content)
    if rest.lc < 0:
        rest, content = -rest, -content
    factors: list[tuple[QPoly, int]] = []
    j = 1
    while rest.degree > 0 and j <= 2 * len(den) + 20:
        f = QPoly.linear(j, 1 - j)
        e = 0
        while rest.degree > 0:
            quo, rem = rest.divmod(f)
            if rem:
                break
            rest, e = quo, e + 1
        if e:
            factors.append((f, e))
        j += 1
    return content, factors, rest


def _latex_qpoly(p: QPoly, var: str = "q") -> str:
    if not p:
        return "0"
    out = ""
    for i in range(len(p) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{{{i}}}" if i > 9 else f"{var}^{i}")
        if a.denominator != 1:
            body = f"\\frac{{{a.numerator}}}{{{a.denominator}}}{mono}"
        elif mono and a == 1:
            body = mono
        else:
            body = f"{a.numerator}{mono}"
        out += body if not out and sign == "+" else sign + body
    return out


def _n_terms(p: QPoly) -> int:
    return sum(1 for c in p.coeffs if c)


def _latex_den(den: QPoly) -> str:
    content, factors, rest = factor_denominator(den)
    parts = []
    for f, e in factors:
        if f == QPoly((0, 1)):
            body = "q"
        else:
            body = f"({_latex_qpoly(f)})"
        parts.append(body + (f"^{e}" if e > 1 else ""))
    if rest.degree > 0:
        parts.append(f"({_latex_qpoly(rest)})")
    text = "".join(parts)
    c = content if rest.degree > 0 else content * rest.lc
    if c == 1 and text:
        return text
    if c == -1 and text:
        return "-" + text
    return f"{_frac_str(c)}{text}"


def latex_rat(r) -> str:
    r = as_qrat(r)
    num, den = integer_form(r)
    if den == 1:
        return _latex_qpoly(num)
    sign = ""
    if all(c <= 0 for c in num.coeffs):
        sign, num = "-", -num
    return f"{sign}\\frac{{{_latex_qpoly(num)}}}{{{_latex_den(den)}}}"


def _latex_numerator(nums: list[QPoly]) -> str:
    out = ""
    for k in range(len(nums) - 1, -1, -1):
        c = nums[k]
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not mono:
            body = _latex_qpoly(c)
            if out and not body.startswith("-"):
                body = "+" + body
        elif _n_terms(c) == 1:
            lead = _latex_qpoly(c)
            if lead == "1":
                lead = ""
            elif lead == "-1":
                lead = "-"
            body = lead + mono
            if out and not body.startswith("-"):
                body = "+" + body
        else:
            neg = c.lc < 0
            inner = _latex_qpoly(-c if neg else c)
            body = ("-" if neg else ("+" if out else "")) + f"({inner}){mono}"
        out += body
    return out or "0"


def latex_xpoly(p: XPoly) -> str:
    if not p:
        return "0"
    nums, den = xpoly_common_form(p)
    numtex = _latex_numerator(nums)
    if den == 1:
        return numtex
    return f"\\frac{{{numtex}}}{{{_latex_den(den)}}}"


_LATEX_NAMES = {
    "bernoulli": ("\\beta_n(x)", "b_n", "Degenerate Bernoulli polynomials $\\beta_n(x)$ and numbers $b_n$"),
    "euler": ("E_n(x)", "e_n", "Degenerate Euler polynomials $E_n(x)$ and values $e_n=E_n(0)$"),
    "genocchi": ("G_n(x)", "g_n", "Degenerate Genocchi polynomials $G_n(x)$ and numbers $g_n$"),
}


def latex_table(family: str, rows) -> str:
    """A three-column tabular (n, polynomial, number) in the layout of the printed tables."""
    poly_name, num_name, caption = _LATEX_NAMES[family]
    lines = [
        "\\begin{table}[!h]",
        "\\begin{tabular}{cll}",
        "\\hline",
        f"$n$ & \\quad${poly_name}$ & ${num_name}$ \\\\",
        "\\hline",
    ]
    for n, poly, num in rows:
        lines.append(f"${n}$ & \\quad${latex_xpoly(poly)}$ & \\quad${latex_rat(num)}$\\\\[4pt]")
    lines += ["\\hline", "\\end{tabular}", f"\\caption{{{caption}.}}", "\\end{table}"]
    return "\n".join(lines) + "\n"
