"""Expanding polynomials in the degenerate Bernoulli and Euler bases.

The connection constants are obtained two ways: from integrals and values of
c_q-derivatives, and from the umbral pairing against g(t) t^k.  They agree.
"""

from __future__ import annotations

from qumbral.cfactorial import get_cseq
from qumbral.families import (
    bernoulli_in_euler,
    expand_in_bernoulli_basis,
    expand_in_euler_basis,
    poly_of,
    resolve_bernoulli_in_euler_lambda,
    resolve_euler_basis_sign,
    sheffer_g,
)
from qumbral.formats import parse_polynomial
from qumbral.umbral import expand_in_sheffer_basis, reconstruct

cs = get_cseq()
p = parse_polynomial("x^3 - q*x + 1/2")

d = expand_in_bernoulli_basis(p, cs)
print("Bernoulli basis:", [str(c) for c in d])
assert d == expand_in_sheffer_basis(p, sheffer_g("bernoulli", 3, cs), cs)
assert reconstruct(d, [poly_of("bernoulli", k) for k in range(4)]) == p

e = expand_in_euler_basis(p, cs)
print("Euler basis:    ", [str(c) for c in e])
assert reconstruct(e, [poly_of("euler", k) for k in range(4)]) == p

# Two constants in the connection formulas are pinned down by the n = 1 case.
print("lambda =", resolve_bernoulli_in_euler_lambda(cs))
print("sign   =", "+" if resolve_euler_basis_sign(cs) > 0 else "-")
beta4 = reconstruct(bernoulli_in_euler(4, cs), [poly_of("euler", k) for k in range(5)])
print("beta_4 rebuilt from E_k:", beta4 == poly_of("bernoulli", 4))
