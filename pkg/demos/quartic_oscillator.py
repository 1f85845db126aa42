"""
Quartic oscillator: an asymptotic series
========================================

For V = r^2/2 + lam r^4 the corrections E_k grow factorially, so the
partial sums first settle and then wander off. The Numerov eigenvalue
shows where the best truncation sits.
"""
from fractions import Fraction

from hbarlpt import OscillatorPotential, QuantumNumbers, oscillator_series
from hbarlpt.numeric import oscillator_problem, solve_eigenvalue

qn = QuantumNumbers(0, 0)

# closed-form check at lam = 1: 3/2, 15/4, -165/8, ...
series, _ = oscillator_series(OscillatorPotential(1, 1, [1]), qn, 8)
print("lam = 1:", ", ".join(str(series[k]) for k in series.orders()))

for lam in (Fraction(1, 100), Fraction(1, 20), Fraction(1, 5)):
    series, _ = oscillator_series(OscillatorPotential(1, 1, [lam]), qn, 20)
    exact = solve_eigenvalue(oscillator_problem(1.0, (float(lam),)))
    errors = [abs(float(series.partial_sum(K)) - exact) for K in series.orders()]
    best = min(range(len(errors)), key=errors.__getitem__) + 1
    print(f"\nlam = {lam}: E_num = {exact:.12f}")
    for K in (1, 2, 4, 8, 12, 16, 20):
        print(f"  K={K:>2}  partial sum {float(series.partial_sum(K)):.12f}  error {errors[K - 1]:.2e}")
    print(f"  smallest error at K={best}: {errors[best - 1]:.2e}")
