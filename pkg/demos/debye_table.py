"""
Screened Coulomb levels from the hbar expansion
===============================================

Partial sums of the binding energy -E for V(r) = -exp(-kappa r)/r in
units hbar = m = alpha = 1, next to a Numerov eigenvalue.
"""
from fractions import Fraction

from hbarlpt import DebyeSpec, QuantumNumbers, coulomb_series, debye_taylor, render_decimal
from hbarlpt.numeric import debye_problem, solve_eigenvalue

ROWS = (0, 1, 2, 3, 4, 5, 10, 15, 20, 25)

# three states; the middle one uses kappa = 1/20 (see README)
states = [(0, 0, Fraction(1, 5), 10), (1, 0, Fraction(1, 20), 10), (1, 1, Fraction(1, 50), 11)]

columns = []
for n, l, kappa, digits in states:
    # Taylor data of r V(r) up to the order we need, then the exact recursion
    pot = debye_taylor(DebyeSpec(1, kappa), 26)
    series, _ = coulomb_series(pot, QuantumNumbers(n, l), 25)
    sums = [render_decimal(-series.partial_sum(K), digits) for K in ROWS]
    oracle = -solve_eigenvalue(debye_problem(1.0, float(kappa), n, l))
    columns.append((f"n={n} l={l} kappa={kappa}", sums, f"{oracle:.{digits}f}"))

print(f"{'K':>5}  " + "  ".join(f"{c[0]:>22}" for c in columns))
for i, K in enumerate(ROWS):
    print(f"{K:>5}  " + "  ".join(f"{c[1][i]:>22}" for c in columns))
print(f"{'E_num':>5}  " + "  ".join(f"{c[2]:>22}" for c in columns))

# the corrections themselves are exact rationals
series, _ = coulomb_series(debye_taylor(DebyeSpec(1, Fraction(1, 5)), 6), QuantumNumbers(0, 0), 5)
for k in series.orders():
    print(f"E_{k} = {series[k]}")
