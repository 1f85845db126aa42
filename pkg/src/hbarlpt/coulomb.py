"""hbar-expansion for screened Coulomb potentials.

The potential is given by its Taylor data ``V(r) = (1/r) sum_i V_i r**i``.  After
the scale change r -> hbar**2 r the series read

    E    = hbar**-2 * sum_k E_k hbar**(2k)
    C(r) = hbar**-1 * sum_k C_k(r) hbar**k,   C_k(r) = r**-k sum_i C^k_i r**i,

with ``C_0 = C^0_0`` constant.  The residue condition ``C^k_{k-1} = N delta_{1k}``
(``N = n + l + 1``) at order ``k + 1`` fixes ``C^k_k``, after which ``E_k``
follows from the power balance at index ``i = k``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import RationalLike, as_rational, sqrt_exact
from .tables import COULOMB, CoefficientTable, EnergySeries, QuantumNumbers

__all__ = [
    "CoulombPotential",
    "DebyeSpec",
    "NoBoundStateError",
    "debye_taylor",
    "coulomb_c0",
    "coulomb_coefficient_step",
    "coulomb_diagonal",
    "coulomb_energy",
    "coulomb_series",
    "coulomb_closed_form",
    "debye_closed_form",
]


class NoBoundStateError(ValueError):
    """The Coulomb core is not attractive, so there is no bound state to expand."""


@dataclass(frozen=True)
class CoulombPotential:
    m: Fraction
    V: tuple[Fraction, ...]

    def __init__(self, m: RationalLike, V: Sequence[RationalLike]):
        m = as_rational(m)
        V = tuple(as_rational(v) for v in V)
        if m <= 0:
            raise ValueError(f"mass must be positive, got {m}")
        if not V:
            raise ValueError("at least the Coulomb coefficient V_0 is required")
        if V[0] >= 0:
            raise NoBoundStateError(f"V_0 = {V[0]} is not attractive")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "V", V)

    def coefficient(self, i: int) -> Fraction:
        """Taylor coefficient ``V_i``; zero past the supplied list."""
        if 0 <= i < len(self.V):
            return self.V[i]
        return Fraction(0)


@dataclass(frozen=True)
class DebyeSpec:
    """``V(r) = -(alpha / r) exp(-kappa r)``."""

    alpha: Fraction
    kappa: Fraction
    m: Fraction = Fraction(1)

    def __init__(self, alpha: RationalLike, kappa: RationalLike, m: RationalLike = 1):
        alpha, kappa, m = as_rational(alpha), as_rational(kappa), as_rational(m)
        if alpha <= 0:
            raise ValueError(f"alpha must be positive, got {alpha}")
        if kappa < 0:
            raise ValueError(f"kappa must be nonnegative, got {kappa}")
        if m <= 0:
            raise ValueError(f"mass must be positive, got {m}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "m", m)


def debye_taylor(spec: DebyeSpec, I: int) -> CoulombPotential:
    """Taylor data ``V_i = -alpha (-kappa)**i / i!`` for ``i = 0..I``."""
    if I < 0:
        raise ValueError("I must be >= 0")
    V = [-spec.alpha * (-spec.kappa) ** i / math.factorial(i) for i in range(I + 1)]
    return CoulombPotential(spec.m, V)


def coulomb_c0(pot: CoulombPotential, qn: QuantumNumbers) -> Fraction:
    """``C^0_0 = -sqrt(-2 m E_0)`` with ``E_0 = -m V_0**2 / (2 N**2)``."""
    V0 = pot.coefficient(0)
    if V0 >= 0:
        raise NoBoundStateError(f"V_0 = {V0} is not attractive")
    N = qn.zero_count(COULOMB)
    E0 = -pot.m * V0**2 / (2 * N**2)
    return -sqrt_exact(-2 * pot.m * E0)


def coulomb_coefficient_step(
    table: CoefficientTable, pot: CoulombPotential, qn: QuantumNumbers, k: int, i: int
) -> Fraction:
    """``C^k_i`` for ``k >= 1``, ``i != k``.

    At ``k = 1`` the only energy that could enter is ``E_1 delta_{i1}``, and
    ``i = 1 = k`` is excluded, so no energy is needed here.
    """
    if k < 1:
        raise ValueError("coefficient step needs k >= 1")
    if i == k:
        raise ValueError("C^k_k is fixed through the quantization condition")
    c00 = table[0, 0]
    if k == 1:
        return pot.m * pot.coefficient(i) / c00
    acc = (i - k + 1) * table[k - 1, i]
    for j in range(1, k):
        for p in range(i + 1):
            acc += table[j, p] * table[k - j, i - p]
    if k == 2 and i == 0:
        acc -= qn.L
    return -acc / (2 * c00)


def coulomb_diagonal(table: CoefficientTable, qn: QuantumNumbers, k: int) -> Fraction:
    """``C^k_k`` from the vanishing residue ``C^{k+1}_k = 0``.

    The residue equation is ``sum_{j=1}^{k} sum_{p=0}^{k} C^j_p C^{k+1-j}_{k-p} = 0``;
    ``C^k_k`` appears twice, each time multiplied by ``C^1_0 = N``.
    """
    N = qn.zero_count(COULOMB)
    acc = Fraction(0)
    for j in range(1, k + 1):
        for p in range(k + 1):
            if (j, p) == (k, k) or (j, p) == (1, 0):
                continue
            acc += table[j, p] * table[k + 1 - j, k - p]
    return -acc / (2 * N)


def coulomb_energy(
    table: CoefficientTable, pot: CoulombPotential, qn: QuantumNumbers, k: int
) -> Fraction:
    """``E_k`` from the power balance at index ``i = k`` (needs ``C^k_k``)."""
    if k == 0:
        N = qn.zero_count(COULOMB)
        return -pot.m * pot.coefficient(0) ** 2 / (2 * N**2)
    c00 = table[0, 0]
    if k == 1:
        # C^1_1 = (m / C^0_0) (V_1 - E_1)
        return pot.coefficient(1) - c00 * table[1, 1] / pot.m
    acc = table[k - 1, k]
    for j in range(1, k):
        for p in range(k + 1):
            acc += table[j, p] * table[k - j, k - p]
    acc += 2 * c00 * table[k, k]
    return -acc / (2 * pot.m)


def coulomb_series(
    pot: CoulombPotential, qn: QuantumNumbers, K: int
) -> tuple[EnergySeries, CoefficientTable]:
    """Energy corrections ``E_0..E_K`` and the table ``C^k_i`` (k, i <= K)."""
    if K < 0:
        raise ValueError("K must be >= 0")
    table = CoefficientTable(COULOMB, K, K)
    table[0, 0] = coulomb_c0(pot, qn)
    for i in range(1, K + 1):
        table[0, i] = 0
    energies = [coulomb_energy(table, pot, qn, 0)]
    for k in range(1, K + 1):
        for i in range(K + 1):
            if i != k:
                table[k, i] = coulomb_coefficient_step(table, pot, qn, k, i)
        if k <= K:
            table[k, k] = coulomb_diagonal(table, qn, k)
        energies.append(coulomb_energy(table, pot, qn, k))
    return EnergySeries(tuple(energies), 0, COULOMB), table.freeze()


def coulomb_closed_form(pot: CoulombPotential, qn: QuantumNumbers, k: int) -> Fraction:
    """Explicit corrections ``E_0..E_5`` in terms of ``V_0..V_5``."""
    if not 0 <= k <= 5:
        raise ValueError(f"closed form only available for k = 0..5, got {k}")
    m = pot.m
    V0, V1, V2, V3, V4, V5 = (pot.coefficient(i) for i in range(6))
    N = Fraction(qn.zero_count(COULOMB))
    L = Fraction(qn.L)
    if k == 0:
        return -m * V0**2 / (2 * N**2)
    if k == 1:
        return V1
    if k == 2:
        return (L - 3 * N**2) * V2 / (2 * m * V0)
    if k == 3:
        return N**2 / (2 * m**2 * V0**2) * (1 - 3 * L + 5 * N**2) * V3
    if k == 4:
        return N**2 / (8 * m**3 * V0**4) * (
            (3 * L**2 - 5 * N**2 - 7 * N**4) * V2**2
            + (3 * L * (2 - L) - 5 * N**2 * (5 - 6 * L) - 35 * N**4) * V0 * V4
        )
    return N**4 / (8 * m**4 * V0**5) * (
        (-5 * L * (2 + 3 * L) + 7 * N**2 * (9 - 2 * L) + 45 * N**4) * V2 * V3
        + (12 - 50 * L + 15 * L**2 + 35 * N**2 * (3 - 2 * L) + 63 * N**4) * V0 * V5
    )


def debye_closed_form(spec: DebyeSpec, qn: QuantumNumbers, k: int) -> Fraction:
    """Debye-specialised corrections ``E_0..E_5`` in their widely quoted form.

    The quoted ``E_4`` carries ``+77 N**4``; the general Taylor-coefficient
    formula and the recursion both give ``-77 N**4``.  Kept as quoted so the
    disagreement stays testable; use :func:`coulomb_series` for actual values.
    """
    if not 0 <= k <= 5:
        raise ValueError(f"closed form only available for k = 0..5, got {k}")
    m, a, kap = spec.m, spec.alpha, spec.kappa
    N = Fraction(qn.zero_count(COULOMB))
    L = Fraction(qn.L)
    if k == 0:
        return -m * a**2 / (2 * N**2)
    if k == 1:
        return a * kap
    if k == 2:
        return (L - 3 * N**2) / (4 * m) * kap**2
    if k == 3:
        return N**2 / (12 * m**2 * a) * (1 - 3 * L + 5 * N**2) * kap**3
    if k == 4:
        return N**2 / (192 * m**3 * a**2) * (
            3 * L * (2 + 5 * L) - 5 * (11 - 6 * L) * N**2 + 77 * N**4
        ) * kap**4
    return N**4 / (320 * m**4 * a**3) * (
        4 - 50 * L - 45 * L**2 + 35 * (7 - 2 * L) * N**2 + 171 * N**4
    ) * kap**5
