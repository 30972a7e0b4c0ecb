"""Degenerate Bernoulli, Euler and Genocchi tables, and how they collapse at q = 1.

Run with ``python demos/tables_and_limits.py``.
"""

from __future__ import annotations

from fractions import Fraction

from qumbral.cfactorial import get_cseq
from qumbral.families import Family, build_table, numbers

# Symbolic tables: every entry is an exact element of Q(q).
for family in Family:
    print(f"--- {family.value} ---")
    tab = build_table(family, 4)
    for n, (p, u) in enumerate(zip(tab.polys, tab.numbers)):
        print(f"{n}: {p}    [{u}]")
    print()

# At q = 1 the weights c_n become n! and the classical numbers come back.
one = get_cseq(1)
print("q = 1 Bernoulli:", [str(b) for b in numbers("bernoulli", 8, one)])
print("q = 1 Genocchi: ", [str(g) for g in numbers("genocchi", 8, one)])

# At q = 2 the deformed exponential is 1/(1 - t), so c_n = 1 and b(t) = 1 - t.
two = get_cseq(2)
print("q = 2 Bernoulli:", [str(b) for b in numbers("bernoulli", 6, two)])

# Specializing the symbolic value agrees with computing at the point directly.
b6 = numbers("bernoulli", 6)[6]
q0 = Fraction(5, 2)
print(f"b_6 at q={q0}: {b6(q0)} == {numbers('bernoulli', 6, get_cseq(q0))[6]}")
