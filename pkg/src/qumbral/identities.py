"""Executable catalog of identities, checked index by index.

Each check maps (n, cs) to a list of labelled equalities ``(label, lhs, rhs)``;
an index passes when every pair is equal as canonical values.  Symbolic runs
use the indeterminate q; sampled runs repeat each index at several rational
q values that avoid the pole set.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .cfactorial import CSeq, c_power_of_sum, get_cseq
from .families import (
    PRINTED_LAMBDA,
    PROOF_LAMBDA,
    Family,
    bernoulli_in_euler,
    bhat,
    euler_in_bernoulli,
    expand_in_bernoulli_basis,
    expand_in_euler_basis,
    generating_series,
    genocchi_in_bernoulli,
    numbers,
    numbers_recurrence_route,
    numbers_series_route,
    poly_of,
    resolve_bernoulli_in_euler_lambda,
    resolve_euler_basis_sign,
    sheffer_g,
)
from .polyx import XPoly, XYPoly, c_substitute, leading_coeff, xpoly_eval
from .series import TSeries, eq_exp_scaled, ts_derivative, ts_mul
from .umbral import (
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

__all__ = [
    "IdentityCheck",
    "IdentityReport",
    "Outcome",
    "REGISTRY",
    "DEFAULT_SAMPLES",
    "BIVARIATE_CAP",
    "UnknownIdentity",
    "run_check",
    "run_all",
    "sample_points",
]

SYMBOLIC_Q = "symbolic-in-q"
SYMBOLIC_QXY = "symbolic-in-q-x-y"
SAMPLED_Q = "sampled-q"

DEFAULT_SAMPLES = (Fraction(2), Fraction(3), Fraction(1, 3), Fraction(5, 2), Fraction(-1))
#: symbolic bivariate checks never run past this index
BIVARIATE_CAP = 10

B, E, G = Family.BERNOULLI, Family.EULER, Family.GENOCCHI


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def _mono(n: int) -> XPoly:
    return XPoly.monomial(n)


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    description: str
    n_min: int
    mode: str
    predicate: Callable[[int, CSeq], list]
    cap: int | None = None


@dataclass(frozen=True)
class Outcome:
    n: int
    passed: bool
    witness: dict | None = None

    def to_dict(self) -> dict:
        d = {"n": self.n, "pass": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class IdentityReport:
    id: str
    description: str
    mode: str
    n_range: tuple[int, int]
    outcomes: list[Outcome]
    wall_time: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    @property
    def failures(self) -> list[Outcome]:
        return [o for o in self.outcomes if not o.passed]

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "id": self.id,
            "description": self.description,
            "mode": self.mode,
            "n_range": list(self.n_range),
            "pass": self.passed,
            "outcomes": [o.to_dict() for o in self.outcomes],
        }
        if self.notes:
            d["notes"] = self.notes
        if timing:
            d["metadata"] = {"wall_time": self.wall_time}
        return d


class UnknownIdentity(KeyError):
    def __init__(self, ident: str):
        self.ident = ident
        super().__init__(f"unknown identity {ident!r}; registered: {', '.join(sorted(REGISTRY))}")

    def __str__(self) -> str:
        return self.args[0]


REGISTRY: dict[str, IdentityCheck] = {}


def _register(id: str, description: str, n_min: int = 0, mode: str = SYMBOLIC_Q, cap=None):
    def deco(fn):
        REGISTRY[id] = IdentityCheck(id, description, n_min, mode, fn, cap)
        return fn

    return deco


# -- Bernoulli ---------------------------------------------------------------


@_register("bernoulli-umbral", "sum_k binom_c(n,k) b_k - b_n = delta_{1,n}")
def _bernoulli_umbral(n, cs):
    b = numbers(B, n, cs)
    lhs = sum((cs.binom(n, k) * b[k] for k in range(n + 1)), cs.zero) - b[n]
    return [("umbral", lhs, cs.one * _delta(1, n))]


@_register("bernoulli-at-1", "beta_n(1) - b_n = delta_{1,n}")
def _bernoulli_at_1(n, cs):
    b = numbers(B, n, cs)
    return [("value", xpoly_eval(poly_of(B, n, cs), 1) - b[n], cs.one * _delta(1, n))]


@_register("bernoulli-recurrence", "sum_{k<=n} binom_c(n+1,k) b_k = delta_{n,0}")
def _bernoulli_recurrence(n, cs):
    b = numbers(B, n, cs)
    lhs = sum((cs.binom(n + 1, k) * b[k] for k in range(n + 1)), cs.zero)
    return [("recurrence", lhs, cs.one * _delta(n, 0))]


@_register("bernoulli-integral", "c_q-integral of beta_n over [0,1] = c_n delta_{n,0}")
def _bernoulli_integral(n, cs):
    b = numbers(B, n, cs)
    integral = c_integral(poly_of(B, n, cs), 0, 1, cs)
    via_numbers = cs.ratio(n, n + 1) * sum(
        (cs.binom(n + 1, k) * b[k] for k in range(n + 1)), cs.zero
    )
    return [
        ("integral", integral, cs.c(n) * _delta(n, 0)),
        ("via numbers", via_numbers, integral),
    ]


@_register(
    "monomial-in-bernoulli",
    "x^n = (c_n/c_{n+1}) sum_k binom_c(n+1,k) beta_k(x) and [x^n] beta_n = 1",
)
def _monomial_in_bernoulli(n, cs):
    rhs = reconstruct(
        [cs.ratio(n, n + 1) * cs.binom(n + 1, k) for k in range(n + 1)],
        [poly_of(B, k, cs) for k in range(n + 1)],
    )
    return [
        ("expansion", rhs, _mono(n)),
        ("leading", leading_coeff(poly_of(B, n, cs)), (n, cs.one)),
    ]


def _euler_ratio(n: int, cs: CSeq):
    q = cs.q
    return ((n - 1) - q * (n - 2)) / ((n - 1) * q - (n - 2))


@_register(
    "euler-identity-numbers",
    "sum_{k>=1} binom_c(n,k) b_k b_{n-k} = -n b_n - n b_{n-1} ((n-1)-q(n-2))/((n-1)q-(n-2))",
    n_min=2,
)
def _euler_identity_numbers(n, cs):
    b = numbers(B, n, cs)
    lhs = sum((cs.binom(n, k) * b[k] * b[n - k] for k in range(1, n + 1)), cs.zero)
    rhs = -n * b[n] - n * b[n - 1] * _euler_ratio(n, cs)
    return [("identity", lhs, rhs)]


def euler_identity_poly_sides(n: int, cs: CSeq) -> tuple[XYPoly, XYPoly]:
    """Both sides of the bivariate Euler identity, with p((x+y)_c) read as c_substitute."""
    lhs = XYPoly()
    for k in range(n + 1):
        lhs = lhs + XYPoly.outer(poly_of(B, k, cs), poly_of(B, n - k, cs)) * cs.binom(n, k)
    rhs = (
        c_substitute(poly_of(B, n, cs), cs) * (-(n - 1))
        - c_substitute(poly_of(B, n - 1, cs), cs) * (n * _euler_ratio(n, cs))
        + c_substitute(bhat(n, cs), cs)
        + c_substitute(bhat(n - 1, cs), cs) * ((1 - cs.q) * cs.ratio(n, n - 1))
    )
    return lhs, rhs


@_register(
    "euler-identity-polys",
    "sum_k binom_c(n,k) beta_k(x) beta_{n-k}(y) in terms of beta_n, beta_{n-1}, Bhat_n, Bhat_{n-1} at (x+y)_c",
    n_min=2,
    mode=SYMBOLIC_QXY,
    cap=BIVARIATE_CAP,
)
def _euler_identity_polys(n, cs):
    lhs, rhs = euler_identity_poly_sides(n, cs)
    return [("identity", lhs, rhs)]


@_register("bernoulli-ode", "b^2 = (1-qt) b - (1+(1-q)t) t b' coefficientwise, b = t/(e_q(t)-1)")
def _bernoulli_ode(n, cs):
    b = generating_series(B, n + 1, cs)
    t = TSeries.t(n + 1)
    lhs = ts_mul(b, b)
    rhs = ts_mul(1 - t * cs.q, b) - ts_mul(ts_mul(1 + t * (1 - cs.q), t), ts_derivative(b))
    return [("coefficient", lhs[n], rhs[n])]


# -- Euler -------------------------------------------------------------------


@_register("euler-umbral", "sum_k binom_c(n,k) e_k + e_n = 2 delta_{0,n}")
def _euler_umbral(n, cs):
    e = numbers(E, n, cs)
    lhs = sum((cs.binom(n, k) * e[k] for k in range(n + 1)), cs.zero) + e[n]
    return [("umbral", lhs, cs.one * 2 * _delta(0, n))]


@_register("euler-at-1", "E_n(1) + e_n = 2 delta_{0,n}")
def _euler_at_1(n, cs):
    e = numbers(E, n, cs)
    return [("value", xpoly_eval(poly_of(E, n, cs), 1) + e[n], cs.one * 2 * _delta(0, n))]


@_register(
    "monomial-in-euler",
    "x^n = (1/2) sum_k binom_c(n,k) E_k(x) + (1/2) E_n(x) and [x^n] E_n = 1",
)
def _monomial_in_euler(n, cs):
    half = Fraction(1, 2)
    coeffs = [half * cs.binom(n, k) for k in range(n + 1)]
    coeffs[n] = coeffs[n] + half
    rhs = reconstruct(coeffs, [poly_of(E, k, cs) for k in range(n + 1)])
    return [
        ("expansion", rhs, _mono(n)),
        ("leading", leading_coeff(poly_of(E, n, cs)), (n, cs.one)),
    ]


@_register("euler-recurrence", "-2 e_n = sum_{k<n} binom_c(n,k) e_k", n_min=1)
def _euler_recurrence(n, cs):
    e = numbers(E, n, cs)
    rhs = sum((cs.binom(n, k) * e[k] for k in range(n)), cs.zero)
    return [("recurrence", -2 * e[n], rhs)]


# -- Genocchi ----------------------------------------------------------------


@_register("genocchi-umbral", "sum_k binom_c(n,k) g_k + g_n = 2 delta_{1,n}")
def _genocchi_umbral(n, cs):
    g = numbers(G, n, cs)
    lhs = sum((cs.binom(n, k) * g[k] for k in range(n + 1)), cs.zero) + g[n]
    return [("umbral", lhs, cs.one * 2 * _delta(1, n))]


@_register("genocchi-at-1", "G_n(1) + g_n = 2 delta_{1,n}")
def _genocchi_at_1(n, cs):
    g = numbers(G, n, cs)
    return [("value", xpoly_eval(poly_of(G, n, cs), 1) + g[n], cs.one * 2 * _delta(1, n))]


@_register("genocchi-degree", "G_0 = 0; deg G_n = n-1 with leading coefficient c_n/c_{n-1}")
def _genocchi_degree(n, cs):
    p = poly_of(G, n, cs)
    if n == 0:
        return [("zero", p, XPoly())]
    return [("leading", leading_coeff(p), (n - 1, cs.ratio(n, n - 1)))]


@_register(
    "monomial-in-genocchi",
    "x^n = (c_n/2c_{n+1}) [sum_{k<=n+1} binom_c(n+1,k) G_k + G_{n+1}] and [x^n] G_{n+1} = c_{n+1}/c_n",
)
def _monomial_in_genocchi(n, cs):
    scale = cs.ratio(n, n + 1) * Fraction(1, 2)
    coeffs = [scale * cs.binom(n + 1, k) for k in range(n + 2)]
    coeffs[n + 1] = coeffs[n + 1] + scale
    rhs = reconstruct(coeffs, [poly_of(G, k, cs) for k in range(n + 2)])
    return [
        ("expansion", rhs, _mono(n)),
        ("leading", poly_of(G, n + 1, cs).coeff(n), cs.ratio(n + 1, n)),
    ]


@_register("genocchi-recurrence", "-2 g_{n+1} = sum_{k<=n} binom_c(n+1,k) g_k", n_min=1)
def _genocchi_recurrence(n, cs):
    g = numbers(G, n + 1, cs)
    rhs = sum((cs.binom(n + 1, k) * g[k] for k in range(n + 1)), cs.zero)
    return [("recurrence", -2 * g[n + 1], rhs)]


@_register("genocchi-euler-bridge", "G_n(x) = (c_n/c_{n-1}) E_{n-1}(x)", n_min=1)
def _genocchi_euler_bridge(n, cs):
    return [("bridge", poly_of(G, n, cs), poly_of(E, n - 1, cs) * cs.ratio(n, n - 1))]


# -- umbral machinery --------------------------------------------------------


def _xy_exp_series(order: int, cs: CSeq, var: str) -> TSeries:
    coeffs = []
    for k in range(order + 1):
        key = (k, 0) if var == "x" else (0, k)
        coeffs.append(XYPoly({key: 1 / cs.c(k)}))
    return TSeries(coeffs)


@_register(
    "prop1-product",
    "c_n [t^n] e_q(xt) e_q(yt) = c_n [t^n] e_q(xt (+)_q yt) = (x+y)^n_c",
    mode=SYMBOLIC_QXY,
    cap=BIVARIATE_CAP,
)
def _prop1_product(n, cs):
    ex, ey = _xy_exp_series(n, cs, "x"), _xy_exp_series(n, cs, "y")
    product = ts_mul(ex, ey)
    # u = xt (+)_q yt = (x + y) t + (1 - q) x y t^2
    u = TSeries([0, XYPoly({(1, 0): 1, (0, 1): 1}), XYPoly({(1, 1): 1 - cs.q})], n)
    composed = TSeries([XYPoly({(0, 0): 1})], n)
    power = TSeries([XYPoly({(0, 0): 1})], n)
    for k in range(1, n + 1):
        power = ts_mul(power, u)
        composed = composed + power * (1 / cs.c(k))
    target = c_power_of_sum(n, cs)
    return [
        ("product", product[n] * cs.c(n), target),
        ("deformed sum", composed[n] * cs.c(n), target),
    ]


def _sheffer_families():
    return (B, E, G)


@_register("sheffer-lowering", "t s_n(x) = (c_n/c_{n-1}) s_{n-1}(x) for all three families", n_min=1)
def _sheffer_lowering(n, cs):
    t = TSeries.t(n)
    out = []
    for fam in _sheffer_families():
        lhs = apply_series(t, poly_of(fam, n, cs), cs)
        out.append((fam.value, lhs, poly_of(fam, n - 1, cs) * cs.ratio(n, n - 1)))
        out.append((fam.value + " d_cq", d_cq(poly_of(fam, n, cs), 1, cs), lhs))
    return out


@_register(
    "sheffer-orthogonality",
    "<g(t) t^k | s_n(x)> = c_n delta_{n,k} for 0<=k<=n+1 (Genocchi: k,n >= 1 with g t^k = (e_q+1)/2 t^(k-1))",
)
def _sheffer_orthogonality(n, cs):
    out = []
    order = n + 2
    for fam in (B, E):
        g = sheffer_g(fam, order, cs)
        s = poly_of(fam, n, cs)
        for k in range(n + 2):
            out.append((f"{fam.value} k={k}", pair(ts_mul(g, TSeries.t(order, k)), s, cs), cs.c(n) * _delta(n, k)))
    if n >= 1:
        ge = sheffer_g(E, order, cs)
        s = poly_of(G, n, cs)
        for k in range(1, n + 2):
            out.append((f"genocchi k={k}", pair(ts_mul(ge, TSeries.t(order, k - 1)), s, cs), cs.c(n) * _delta(n, k)))
    return out


def _sheffer_identity_rhs(fam, n, cs) -> XYPoly:
    out = XYPoly()
    for k in range(n + 1):
        out = out + XYPoly.outer(poly_of(fam, n - k, cs), XPoly.monomial(k, cs.binom(n, k)))
    return out


@_register(
    "sheffer-identity",
    "e_q(yt) s_n(x) = sum_k binom_c(n,k) y^k s_{n-k}(x), y symbolic",
    mode=SYMBOLIC_QXY,
    cap=BIVARIATE_CAP,
)
def _sheffer_identity(n, cs):
    return [
        (fam.value, apply_exp_y(poly_of(fam, n, cs), cs), _sheffer_identity_rhs(fam, n, cs))
        for fam in _sheffer_families()
    ]


@_register(
    "integral-lemma",
    "<(e_q(yt)-1)/t | x^n> = c_q-integral of x^n over [0,y]; D_cq inverts the integral",
)
def _integral_lemma(n, cs):
    y = XPoly.x()
    f = (eq_exp_scaled(y, n + 1, cs) - 1).div_t()
    lhs = pair(f, _mono(n), cs)
    rhs = c_antiderivative(_mono(n), cs)
    out = [
        ("lemma", lhs, rhs),
        ("definite", c_integral(_mono(n), 0, y, cs), rhs),
        ("D after I", d_cq(c_antiderivative(_mono(n), cs), 1, cs), _mono(n)),
    ]
    if n >= 1:
        out.append(("I after D", c_antiderivative(d_cq(_mono(n), 1, cs), cs), _mono(n)))
    return out


@_register(
    "conjugate-representation",
    "(1/g(t)) x^n = sum_k <g^{-1} t^k | x^n>/c_k x^k = s_n(x) for all three families",
)
def _conjugate_representation(n, cs):
    out = []
    for fam in _sheffer_families():
        inv = generating_series(fam, n, cs)
        gen = sheffer_generate(None, n, cs, inverse=inv)
        conj = conjugate_representation(None, n, cs, inverse=inv)
        out.append((fam.value + " generate", gen, poly_of(fam, n, cs)))
        out.append((fam.value + " conjugate", conj, gen))
        if fam is not G:
            g = sheffer_g(fam, n, cs)
            out.append((fam.value + " via g", sheffer_generate(g, n, cs), gen))
    return out


# -- connections ---------------------------------------------------------------


@_register(
    "bernoulli-basis-expansion",
    "x^n expanded in beta_k by integrals of D^k x^n matches the Sheffer expansion and reconstructs",
)
def _bernoulli_basis_expansion(n, cs):
    d = expand_in_bernoulli_basis(_mono(n), cs)
    basis = [poly_of(B, k, cs) for k in range(n + 1)]
    return [
        ("reconstruct", reconstruct(d, basis), _mono(n)),
        ("sheffer oracle", d, expand_in_sheffer_basis(_mono(n), sheffer_g(B, n, cs), cs)),
        ("closed form", d, [cs.ratio(n, n + 1) * cs.binom(n + 1, k) for k in range(n + 1)]),
    ]


@_register(
    "euler-in-bernoulli-forms",
    "E_n = sum d_k beta_k: single-sum and double-sum coefficient forms agree and reconstruct",
)
def _euler_in_bernoulli_forms(n, cs):
    single = euler_in_bernoulli(n, cs, "single")
    double = euler_in_bernoulli(n, cs, "double")
    basis = [poly_of(B, k, cs) for k in range(n + 1)]
    target = poly_of(E, n, cs)
    return [
        ("forms agree", single, double),
        ("reconstruct", reconstruct(single, basis), target),
        ("basis oracle", single, expand_in_bernoulli_basis(target, cs)),
    ]


@_register(
    "genocchi-in-bernoulli-forms",
    "G_n = sum d_k beta_k: single-sum and double-sum coefficient forms agree and reconstruct",
    n_min=1,
)
def _genocchi_in_bernoulli_forms(n, cs):
    single = genocchi_in_bernoulli(n, cs, "single")
    double = genocchi_in_bernoulli(n, cs, "double")
    basis = [poly_of(B, k, cs) for k in range(n)]
    target = poly_of(G, n, cs)
    return [
        ("forms agree", single, double),
        ("reconstruct", reconstruct(single, basis), target),
        ("basis oracle", single, expand_in_bernoulli_basis(target, cs)),
    ]


def _variant_notes_lambda(n_lo: int, n_hi: int, cs: CSeq) -> dict:
    lam = resolve_bernoulli_in_euler_lambda(cs)
    notes = {"resolved_lambda": str(lam)}
    matched = [name for name, val in (("printed", PRINTED_LAMBDA), ("proof", PROOF_LAMBDA)) if lam == val]
    notes["matched_variant"] = matched[0] if matched else "neither"
    for name, val in (("printed", PRINTED_LAMBDA), ("proof", PROOF_LAMBDA)):
        bad = [
            n
            for n in range(max(n_lo, 1), n_hi + 1)
            if reconstruct(bernoulli_in_euler(n, cs, lam=val), [poly_of(E, k, cs) for k in range(n + 1)])
            != poly_of(B, n, cs)
        ]
        notes[f"{name}_lambda_{val}"] = "pass" if not bad else f"fail at n={bad}"
    return notes


@_register(
    "bernoulli-in-euler",
    "beta_n = sum binom_c(n,k) b_{n-k} E_k + lambda (c_n/c_{n-1}) E_{n-1}, lambda fixed by the n=1 oracle",
    n_min=1,
)
def _bernoulli_in_euler(n, cs):
    d = bernoulli_in_euler(n, cs)
    target = poly_of(B, n, cs)
    basis = [poly_of(E, k, cs) for k in range(n + 1)]
    return [
        ("reconstruct", reconstruct(d, basis), target),
        ("euler-basis oracle", d, expand_in_euler_basis(target, cs)),
        ("sheffer oracle", d, expand_in_sheffer_basis(target, sheffer_g(E, n, cs), cs)),
    ]


def _variant_notes_sign(n_lo: int, n_hi: int, cs: CSeq) -> dict:
    sign = resolve_euler_basis_sign(cs)
    notes = {"resolved_sign": "+" if sign > 0 else "-"}
    notes["matched_variant"] = "proof (+)" if sign > 0 else "statement (-)"
    for name, s in (("statement_minus", -1), ("proof_plus", 1)):
        bad = []
        for n in range(n_lo, n_hi + 1):
            d = expand_in_euler_basis(_mono(n), cs, sign=s)
            if reconstruct(d, [poly_of(E, k, cs) for k in range(n + 1)]) != _mono(n):
                bad.append(n)
        notes[name] = "pass" if not bad else f"fail at n={bad}"
    return notes


@_register(
    "euler-basis-expansion",
    "x^n = sum d_k E_k with d_k = ((D^k p)(1) +/- (D^k p)(0))/(2 c_k), sign fixed by the n=1 oracle",
)
def _euler_basis_expansion(n, cs):
    d = expand_in_euler_basis(_mono(n), cs)
    basis = [poly_of(E, k, cs) for k in range(n + 1)]
    closed = [Fraction(1, 2) * cs.binom(n, k) for k in range(n + 1)]
    closed[n] = closed[n] + Fraction(1, 2)
    return [
        ("reconstruct", reconstruct(d, basis), _mono(n)),
        ("sheffer oracle", d, expand_in_sheffer_basis(_mono(n), sheffer_g(E, n, cs), cs)),
        ("closed form", d, closed),
    ]


@_register("route-agreement", "series-division numbers = recurrence numbers for all three families")
def _route_agreement(n, cs):
    return [
        (fam.value, numbers_series_route(fam, n, cs)[n], numbers_recurrence_route(fam, n, cs)[n])
        for fam in Family
    ]


_NOTES = {
    "bernoulli-in-euler": _variant_notes_lambda,
    "euler-basis-expansion": _variant_notes_sign,
}


# -- runner ----------------------------------------------------------------------


def _difference(a, b):
    try:
        if isinstance(a, (list, tuple)) and isinstance(b, (list, tuple)):
            if len(a) != len(b):
                return f"length {len(a)} vs {len(b)}"
            return [str(x - y) for x, y in zip(a, b)]
        return str(a - b)
    except TypeError:
        return None


def _render(v):
    if isinstance(v, (list, tuple)):
        return [_render(x) for x in v]
    return str(v)


def _evaluate(check: IdentityCheck, n: int, cs: CSeq) -> dict | None:
    """None when every equality holds, else a witness for the first failure."""
    try:
        pairs = check.predicate(n, cs)
    except ZeroDivisionError as exc:
        return {"label": "error", "error": str(exc)}
    for label, lhs, rhs in pairs:
        if not _equal(lhs, rhs):
            return {
                "label": label,
                "lhs": _render(lhs),
                "rhs": _render(rhs),
                "difference": _difference(lhs, rhs),
            }
    return None


def _equal(a, b) -> bool:
    if isinstance(a, (list, tuple)) and isinstance(b, (list, tuple)):
        return len(a) == len(b) and all(_equal(x, y) for x, y in zip(a, b))
    return a == b


def sample_points(n_max: int, samples=DEFAULT_SAMPLES) -> list[Fraction]:
    """Drop q values where any c_k with k <= n_max + 3 (or the ratio terms) blows up."""
    bad = {Fraction(0)} | {Fraction(j - 1, j) for j in range(1, n_max + 5)}
    return [Fraction(s) for s in samples if Fraction(s) not in bad]


def run_check(ident: str, n_max: int, mode: str = "symbolic", samples=DEFAULT_SAMPLES) -> IdentityReport:
    """Evaluate one registered identity for every n in [n_min, n_max]."""
    if ident not in REGISTRY:
        raise UnknownIdentity(ident)
    if mode not in ("symbolic", "sampled"):
        raise ValueError(f"mode must be 'symbolic' or 'sampled', not {mode!r}")
    check = REGISTRY[ident]
    hi = n_max
    if mode == "symbolic" and check.cap is not None:
        hi = min(hi, check.cap)
    lo = check.n_min
    start = time.perf_counter()
    outcomes = []
    notes: dict = {}
    if mode == "symbolic":
        cs = get_cseq()
        for n in range(lo, hi + 1):
            w = _evaluate(check, n, cs)
            outcomes.append(Outcome(n, w is None, w))
        if ident in _NOTES and hi >= lo:
            notes = _NOTES[ident](lo, hi, cs)
        report_mode = check.mode
    else:
        points = sample_points(hi, samples)
        for n in range(lo, hi + 1):
            w = None
            for q0 in points:
                w = _evaluate(check, n, get_cseq(q0))
                if w is not None:
                    w["q"] = str(q0)
                    break
            outcomes.append(Outcome(n, w is None, w))
        if ident in _NOTES and hi >= lo and points:
            notes = _NOTES[ident](lo, hi, get_cseq(points[0]))
            notes["q"] = str(points[0])
        notes["samples"] = [str(p) for p in points]
        report_mode = SAMPLED_Q
    elapsed = time.perf_counter() - start
    return IdentityReport(
        ident, check.description, report_mode, (lo, hi), outcomes, elapsed, notes
    )


def run_all(n_max: int, mode: str = "symbolic", samples=DEFAULT_SAMPLES) -> list[IdentityReport]:
    return [run_check(ident, n_max, mode, samples) for ident in sorted(REGISTRY)]
