"""
Checking a coefficient table
============================

Every order of the expansion has to solve its own slice of the Riccati
equation. Here we verify a table, break one entry, and watch the check
point at it.
"""
from fractions import Fraction

from hbarlpt import OscillatorPotential, QuantumNumbers, oscillator_series
from hbarlpt.verification import cross_check_closed_forms, riccati_residual, verify_table

pot = OscillatorPotential(Fraction(3, 2), Fraction(2, 3), [Fraction(1, 7), Fraction(-2, 5), Fraction(1, 3)])
qn = QuantumNumbers(1, 2)
series, table = oscillator_series(pot, qn, 8)

print(verify_table(table, series, pot, qn).to_text())

# one wrong entry at order 3
bad = table.with_entry(3, 4, table[3, 4] + 1)
rep = riccati_residual(bad, series, pot, qn, 3)
print("\norder-3 residual vanishes?", rep.all_zero)
print("nonzero at powers of r:", rep.nonzero_powers())
print()
print(verify_table(bad, series, pot, qn).to_text())

# the recursion against the closed forms for E_1..E_5 on a grid of states
cross = cross_check_closed_forms("oscillator", [pot])
print(f"\nclosed forms: {cross.comparisons} comparisons, {len(cross.mismatches)} mismatches")
