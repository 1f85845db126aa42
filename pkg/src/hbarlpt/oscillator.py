"""hbar-expansion of the spherical anharmonic oscillator.

The potential is ``V(r) = m w**2 r**2 / 2 + sum_i f_i r**(2i+2)``.  The
logarithmic derivative is expanded as ``C(r) = sum_k C_k(r) hbar**k`` with

    C_0(r) = r     * sum_i C^0_i r**(2i)
    C_k(r) = r**(1-2k) * sum_i C^k_i r**(2i),   k >= 1,

and the energy as ``E = sum_{k>=1} E_k hbar**k``.  Nodes enter only through
the residue condition ``C^k_{k-1} = N delta_{1k}`` with ``N = 2n + l + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import RationalLike, as_rational
from .tables import OSCILLATOR, CoefficientTable, EnergySeries, QuantumNumbers

__all__ = [
    "OscillatorPotential",
    "c0_oscillator",
    "oscillator_coefficient_step",
    "oscillator_energy",
    "oscillator_series",
    "oscillator_closed_form",
]


@dataclass(frozen=True)
class OscillatorPotential:
    m: Fraction
    omega: Fraction
    f: tuple[Fraction, ...] = ()

    def __init__(self, m: RationalLike, omega: RationalLike, f: Sequence[RationalLike] = ()):
        m, omega = as_rational(m), as_rational(omega)
        if m <= 0:
            raise ValueError(f"mass must be positive, got {m}")
        if omega <= 0:
            raise ValueError(f"omega must be positive, got {omega}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "f", tuple(as_rational(x) for x in f))

    def coupling(self, i: int) -> Fraction:
        """Anharmonic coefficient ``f_i`` (1-based); zero past the supplied list."""
        if 1 <= i <= len(self.f):
            return self.f[i - 1]
        return Fraction(0)

    def scaled(self, t: RationalLike) -> "OscillatorPotential":
        """Potential with ``f_i -> t**i f_i``."""
        t = as_rational(t)
        return OscillatorPotential(self.m, self.omega, [t ** (i + 1) * c for i, c in enumerate(self.f)])


def c0_oscillator(pot: OscillatorPotential, I: int) -> list[Fraction]:
    """Coefficients ``C^0_0..C^0_I`` of ``C_0 = -sqrt(2 m V)``."""
    if I < 0:
        raise ValueError("I must be >= 0")
    m, w = pot.m, pot.omega
    c = [-m * w]
    for i in range(1, I + 1):
        acc = sum((c[p] * c[i - p] for p in range(1, i)), Fraction(0))
        c.append((acc - 2 * m * pot.coupling(i)) / (2 * m * w))
    return c


def oscillator_coefficient_step(
    table: CoefficientTable, pot: OscillatorPotential, qn: QuantumNumbers, k: int, i: int
) -> Fraction:
    """``C^k_i`` for ``k >= 1`` and ``i != k - 1`` from already stored entries."""
    if k < 1:
        raise ValueError("coefficient step needs k >= 1")
    if i == k - 1:
        raise ValueError("C^k_{k-1} is fixed by the quantization condition")
    acc = (3 - 2 * k + 2 * i) * table[k - 1, i]
    for j in range(1, k):
        for p in range(i + 1):
            acc += table[j, p] * table[k - j, i - p]
    for p in range(1, i + 1):
        acc += 2 * table[0, p] * table[k, i - p]
    if k == 2 and i == 0:
        acc -= qn.L
    return -acc / (2 * table[0, 0])


def oscillator_energy(
    table: CoefficientTable, pot: OscillatorPotential, qn: QuantumNumbers, k: int
) -> Fraction:
    """``E_k`` from the power-balance at index ``i = k - 1``."""
    if k < 1:
        raise ValueError("oscillator energies start at k = 1")
    acc = table[k - 1, k - 1]
    for j in range(k + 1):
        for p in range(k):
            acc += table[j, p] * table[k - j, k - 1 - p]
    return -acc / (2 * pot.m)


def oscillator_series(
    pot: OscillatorPotential, qn: QuantumNumbers, K: int
) -> tuple[EnergySeries, CoefficientTable]:
    """Energy corrections ``E_1..E_K`` and the table ``C^k_i`` (k <= K, i <= K-1)."""
    if K < 1:
        raise ValueError("K must be >= 1 for the oscillator")
    N = qn.zero_count(OSCILLATOR)
    table = CoefficientTable(OSCILLATOR, K, K - 1)
    for i, c in enumerate(c0_oscillator(pot, K - 1)):
        table[0, i] = c
    energies = []
    for k in range(1, K + 1):
        for i in range(K):
            if i == k - 1:
                table[k, i] = N if k == 1 else 0
                energies.append(oscillator_energy(table, pot, qn, k))
            else:
                table[k, i] = oscillator_coefficient_step(table, pot, qn, k, i)
    return EnergySeries(tuple(energies), 1, OSCILLATOR), table.freeze()


def oscillator_closed_form(pot: OscillatorPotential, qn: QuantumNumbers, k: int) -> Fraction:
    """Explicit low-order corrections ``E_1..E_5`` as polynomials in the couplings."""
    if not 1 <= k <= 5:
        raise ValueError(f"closed form only available for k = 1..5, got {k}")
    m, w = pot.m, pot.omega
    f1, f2, f3, f4 = (pot.coupling(i) for i in range(1, 5))
    N = Fraction(qn.zero_count(OSCILLATOR))
    eta = N * (N + 1)
    L = Fraction(qn.L)

    if k == 1:
        return (1 + 2 * N) * w / 2
    if k == 2:
        return (3 - 2 * L + 6 * eta) * f1 / (4 * m**2 * w**2)
    if k == 3:
        return (1 + 2 * N) / (8 * m**4 * w**5) * (
            (-21 + 9 * L - 17 * eta) * f1**2 + m * (15 - 6 * L + 10 * eta) * w**2 * f2
        )
    if k == 4:
        return (
            (333 + 11 * L**2 - 3 * L * (67 + 86 * eta) + 3 * eta * (347 + 125 * eta)) * f1**3
            - 6 * m * (60 + 3 * (-13 + L) * L + 175 * eta - 42 * L * eta + 55 * eta**2) * w**2 * f1 * f2
            + m**2 * (6 * L**2 - 12 * L * (6 + 5 * eta) + 35 * (3 + 2 * eta * (4 + eta))) * w**4 * f3
        ) / (16 * m**6 * w**8)
    return -(1 + 2 * N) / (128 * m**8 * w**11) * (
        (30885 + 909 * L**2 - 27 * L * (613 + 330 * eta) + eta * (49927 + 10689 * eta)) * f1**4
        - 4 * m * (11220 + 393 * L**2 - 6 * L * (1011 + 475 * eta) + eta * (16342 + 3129 * eta)) * w**2 * f1**2 * f2
        + 16 * m**2 * (33 * L**2 - L * (501 + 190 * eta) + 63 * (15 + eta * (19 + 3 * eta))) * w**4 * f1 * f3
        + 2 * m**2 * (3495 + 138 * L**2 + 4538 * eta + 786 * eta**2 - 30 * L * (63 + 26 * eta)) * w**4 * f2**2
        - 4 * m**3 * (30 * L**2 - 20 * L * (24 + 7 * eta) + 63 * (15 + 2 * eta * (8 + eta))) * w**6 * f4
    )
