"""The convolution identity for degenerate Bernoulli numbers, checked exactly.

sum_{k=1}^n binom_c(n,k) b_k b_{n-k}
    = -n b_n - n b_{n-1} ((n-1) - q(n-2)) / ((n-1) q - (n-2))

Both sides are built as rational functions of q and compared in canonical form.
"""

from __future__ import annotations

from qumbral.identities import REGISTRY, run_check
from qumbral.cfactorial import get_cseq

cs = get_cseq()
check = REGISTRY["euler-identity-numbers"]
for n in range(2, 7):
    (_, lhs, rhs), = check.predicate(n, cs)
    print(f"n={n}: {lhs}")
    assert lhs == rhs

# The polynomial form lives in two variables; p((x+y)_c) replaces x^k by the c-power of x+y.
report = run_check("euler-identity-polys", 6)
print("bivariate form:", "pass" if report.passed else "fail", "for n in", report.n_range)
